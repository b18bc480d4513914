"""CLI commands for syncgames."""

import asyncio
from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path

import typer
from loguru import logger
from prompt_toolkit import PromptSession
from prompt_toolkit.history import FileHistory
from rich.console import Console
from rich.table import Table

from syncgames import __logo__, __version__
from syncgames.automaton import (
    Dfa,
    KBound,
    export_dot,
    iterate,
    parse_dfa,
    serialize_dfa,
    two_subset,
)
from syncgames.config.loader import load_config
from syncgames.config.schema import Config
from syncgames.errors import CapExceededError, IllegalMoveError, ParseError, PreconditionError
from syncgames.game.transcript import format_tokens
from syncgames.utils.helpers import get_data_path, read_source

app = typer.Typer(
    name="syncgames",
    help=f"{__logo__} syncgames - synchronization games on finite automata",
    no_args_is_help=True,
)

console = Console()
err_console = Console(stderr=True)
EXIT_COMMANDS = {"exit", "quit", ":q"}

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_CAP = 3

_CONFIG_PATH: Path | None = None

# ---------------------------------------------------------------------------
# Shared plumbing
# ---------------------------------------------------------------------------


def _config() -> Config:
    return load_config(_CONFIG_PATH)


def _fail(message: str, code: int) -> None:
    err_console.print(f"[red]Error: {message}[/red]", highlight=False)
    raise typer.Exit(code)


@contextmanager
def _handled() -> Iterator[None]:
    """Map library errors to exit codes: 2 for bad input, 3 for size caps."""
    try:
        yield
    except CapExceededError as e:
        _fail(str(e), EXIT_CAP)
    except (ParseError, PreconditionError, IllegalMoveError) as e:
        _fail(str(e), EXIT_USAGE)
    except OSError as e:
        _fail(str(e), EXIT_USAGE)


def _load_dfa(source: str, config: Config) -> Dfa:
    return parse_dfa(read_source(source), config.caps)


def _result(value: object) -> None:
    typer.echo(f"result: {value}")


def _bound(text: str) -> KBound:
    try:
        return KBound.parse(text)
    except ValueError as e:
        raise ParseError(str(e)) from None


# ---------------------------------------------------------------------------
# Interactive input: prompt_toolkit for editing and history
# ---------------------------------------------------------------------------

_PROMPT_SESSION: PromptSession | None = None


def _init_prompt_session() -> None:
    """Create the prompt_toolkit session with persistent file history."""
    global _PROMPT_SESSION
    history_file = get_data_path() / "history" / "play_history"
    history_file.parent.mkdir(parents=True, exist_ok=True)
    _PROMPT_SESSION = PromptSession(
        history=FileHistory(str(history_file)),
        enable_open_in_editor=False,
        multiline=False,
    )


def _read_move(prompt: str) -> str:
    """Read one line from the player."""
    if _PROMPT_SESSION is None:
        _init_prompt_session()
    assert _PROMPT_SESSION is not None
    try:
        return _PROMPT_SESSION.prompt(prompt)
    except EOFError as exc:
        raise KeyboardInterrupt from exc


def _is_exit_command(command: str) -> bool:
    return command.strip().lower() in EXIT_COMMANDS


def version_callback(value: bool):
    if value:
        console.print(f"{__logo__} syncgames v{__version__}")
        raise typer.Exit()


@app.callback()
def main(
    version: bool = typer.Option(
        None, "--version", "-v", callback=version_callback, is_eager=True
    ),
    logs: bool = typer.Option(False, "--logs/--no-logs", help="Show syncgames debug logs on stderr"),
    config: Path | None = typer.Option(None, "--config", help="Config file (default ~/.syncgames/config.json)"),
):
    """syncgames - decide, certify and simulate synchronization games."""
    global _CONFIG_PATH
    _CONFIG_PATH = config
    if logs:
        logger.enable("syncgames")
    else:
        logger.disable("syncgames")


# ============================================================================
# Automata
# ============================================================================


@app.command()
def gen(
    variant: str | None = typer.Argument(None, help="Family name; omit to list families"),
    n: int | None = typer.Option(None, "--n", help="Number of states"),
    k: int | None = typer.Option(None, "--k", help="Family parameter k"),
    m: int | None = typer.Option(None, "--m", help="Family parameter m"),
):
    """Generate a named automaton in the DFA text format."""
    from syncgames.families import FAMILIES, get_family

    if variant is None:
        table = Table(title="Families")
        table.add_column("Variant", style="cyan")
        table.add_column("Parameters")
        table.add_column("Description")
        for spec in FAMILIES.values():
            table.add_row(spec.variant, " ".join(f"--{p}" for p in spec.params) or "-", spec.summary)
        console.print(table)
        return
    with _handled():
        dfa = get_family(variant).build(n=n, k=k, m=m)
    typer.echo(serialize_dfa(dfa), nl=False)


@app.command("export-dot")
def export_dot_cmd(
    source: str = typer.Argument(..., help="DFA file, or - for stdin"),
    name: str = typer.Option("dfa", "--name", help="Graph name"),
):
    """Render an automaton as a Graphviz digraph."""
    with _handled():
        dfa = _load_dfa(source, _config())
    typer.echo(export_dot(dfa, name), nl=False)


@app.command()
def pairs(
    source: str = typer.Argument(..., help="DFA file, or - for stdin"),
    levels: bool = typer.Option(False, "--levels", help="Print d(p,q) and the component tree instead"),
):
    """Print the 2-subset automaton A^[2], or its level profile with --levels."""
    from syncgames.potential import component_tree, level_profile

    config = _config()
    with _handled():
        dfa = _load_dfa(source, config)
        pa = two_subset(dfa, config.caps)
        if not levels:
            header = [f"# state {i} = {{{p},{q}}}" for i, (p, q) in enumerate(pa.pairs)]
            header.append(f"# state {pa.sink} = sink")
            typer.echo("\n".join(header))
            typer.echo(serialize_dfa(pa.dfa), nl=False)
            return
        profile = level_profile(dfa, pa)

    table = Table(title="Pair levels")
    table.add_column("Pair", style="cyan")
    table.add_column("d", justify="right")
    for (p, q), value in zip(pa.pairs, profile.levels):
        table.add_row(f"{{{p},{q}}}", "inf" if value is None else str(value))
    console.print(table)
    if not profile.all_finite:
        _result("infinite")
        raise typer.Exit(EXIT_NEGATIVE)

    tree = component_tree(profile, dfa)
    for node in sorted(tree.nodes, key=lambda c: (-c.h, min(c.states))):
        kids = " ".join(format_tokens(tree.node(c).states) for c in node.children) or "-"
        typer.echo(f"component {format_tokens(node.states)} h={node.h} gamma={node.gamma} children {kids}")
    _result(profile.max_finite)


@app.command("iterate")
def iterate_cmd(
    source: str = typer.Argument(..., help="DFA file, or - for stdin"),
    m: int = typer.Option(..., "--m", "-m", help="Longest derived word"),
):
    """Print the iteration automaton A^(m)."""
    config = _config()
    with _handled():
        dfa = iterate(_load_dfa(source, config), m, config.caps)
    typer.echo(serialize_dfa(dfa), nl=False)


# ============================================================================
# Decisions
# ============================================================================


@app.command()
def decide(
    source: str = typer.Argument(..., help="DFA file, or - for stdin"),
    k: str | None = typer.Option(None, "-k", help="Bob's bound: a positive integer or omega"),
    m: int | None = typer.Option(None, "-m", help="Play the m/omega-game instead"),
    sink: bool = typer.Option(False, "--sink", help="Decide directly on a sink automaton"),
    certificate: bool = typer.Option(False, "--certificate", help="Print the marking rounds"),
):
    """Decide who wins a k-game, omega-game or m/omega-game."""
    from syncgames.solver import decide_k, decide_k_sink, decide_m_omega, decide_omega, decide_omega_sink

    if (k is None) == (m is None):
        _fail("give exactly one of -k and -m", EXIT_USAGE)
    config = _config()
    with _handled():
        dfa = _load_dfa(source, config)
        if m is not None:
            outcome = decide_m_omega(dfa, m, config.caps, certify=certificate)
        else:
            bound = _bound(k)
            if bound.is_omega:
                outcome = decide_omega_sink(dfa, certificate) if sink else decide_omega(dfa, certificate)
            else:
                outcome = decide_k_sink(dfa, bound) if sink else decide_k(dfa, bound)

    _result(outcome.winner)
    if outcome.witness:
        typer.echo(f"witness: {format_tokens(frozenset(outcome.witness))}")
    if outcome.reason:
        typer.echo(f"reason: {outcome.reason}")
    if certificate and outcome.certificate is not None:
        for state, rnd in enumerate(outcome.certificate.rounds):
            typer.echo(f"round {state} {rnd}")
    if not outcome.alice:
        raise typer.Exit(EXIT_NEGATIVE)


@app.command()
def level(source: str = typer.Argument(..., help="DFA file, or - for stdin")):
    """Largest k for which Alice wins the k-game (omega, or none when not synchronizing)."""
    from syncgames.solver import game_level

    with _handled():
        found = game_level(_load_dfa(source, _config()))
    _result(found)
    if found.kind == "not_synchronizing":
        raise typer.Exit(EXIT_NEGATIVE)


@app.command()
def rt(source: str = typer.Argument(..., help="DFA file, or - for stdin")):
    """Exact reset threshold with a lexicographically least shortest reset word."""
    from syncgames.oracle import rt_exact

    config = _config()
    with _handled():
        dfa = _load_dfa(source, config)
        found = rt_exact(dfa, config.caps)
    if found.rt is None:
        _result("none")
        raise typer.Exit(EXIT_NEGATIVE)
    _result(found.rt)
    typer.echo(f"witness: {dfa.names(found.witness)}")


@app.command("reset-word")
def reset_word(
    source: str = typer.Argument(..., help="DFA file, or - for stdin"),
    m: int = typer.Option(1, "--m", "-m", help="Alice's word length in the m/omega-game"),
):
    """Extract a reset word from Alice's avoidance strategy against a passing Bob."""
    from syncgames.potential import extract_reset_word

    config = _config()
    with _handled():
        dfa = _load_dfa(source, config)
        word = extract_reset_word(dfa, m, config.caps)
    _result(dfa.names(word))
    typer.echo(f"length: {len(word)}")


# ============================================================================
# Games
# ============================================================================


@app.command("simulate")
def simulate_cmd(
    source: str = typer.Argument(..., help="DFA file, or - for stdin"),
    k: str = typer.Option(..., "-k", help="Bob's bound: a positive integer or omega"),
    alice: str = typer.Option("optimal", "--alice", help="optimal, random or scripted:<a,b,...>"),
    bob: str = typer.Option("optimal", "--bob", help="optimal, random, pass, scripted:echo or scripted:<a,b,...>"),
    first: str | None = typer.Option(None, "--first", help="alice or bob (default from config)"),
    horizon: int | None = typer.Option(None, "--horizon", help="Alice moves before Bob is declared the survivor"),
    seed: int | None = typer.Option(None, "--seed", help="Seed for random strategies"),
    out: Path | None = typer.Option(None, "--out", "-o", help="Write the transcript here instead of stdout"),
):
    """Play one game between two strategies and print its transcript."""
    from syncgames.game import Aborted, AliceWon, dump_transcript, simulate
    from syncgames.game.strategies import make_alice, make_bob

    config = _config()
    sim = config.simulation
    mover = first or sim.first
    if mover not in ("alice", "bob"):
        _fail(f"--first must be alice or bob, got {mover!r}", EXIT_USAGE)
    seed = sim.seed if seed is None else seed
    with _handled():
        dfa = _load_dfa(source, config)
        bound = _bound(k)
        transcript = simulate(
            dfa, bound,
            make_alice(alice, dfa, bound, seed, config.caps),
            make_bob(bob, dfa, bound, seed, sim.omega_word_cap),
            first=mover, horizon=horizon, omega_cap=sim.omega_word_cap, seed=seed,
        )
        text = dump_transcript(transcript, dfa)
        if out:
            out.write_text(text, encoding="utf-8")
            err_console.print(f"[green]✓[/green] Transcript written to {out}")
        else:
            typer.echo(text, nl=False)

    outcome = transcript.outcome
    if isinstance(outcome, Aborted):
        _fail(outcome.reason, EXIT_USAGE)
    if isinstance(outcome, AliceWon):
        _result(f"alice@{outcome.at}")
        return
    _result(f"bob@{outcome.horizon}")
    raise typer.Exit(EXIT_NEGATIVE)


def _board(dfa: Dfa, tokens: frozenset[int]) -> str:
    return "  ".join(f"[bold green]{q}●[/bold green]" if q in tokens else f"[dim]{q}○[/dim]" for q in range(dfa.n))


@app.command()
def play(
    source: str = typer.Argument(..., help="DFA file, or - for stdin"),
    k: str = typer.Option("omega", "-k", help="Bob's bound: a positive integer or omega"),
    side: str = typer.Option("alice", "--side", help="Your side: alice or bob"),
    opponent: str = typer.Option("optimal", "--opponent", help="optimal, random, pass, scripted:<a,b,...>"),
    first: str | None = typer.Option(None, "--first", help="alice or bob (default from config)"),
    seed: int | None = typer.Option(None, "--seed", help="Seed for a random opponent"),
    save: Path | None = typer.Option(None, "--save", help="Write the transcript here when the game ends"),
):
    """Play a game in the terminal against a strategy."""
    from syncgames.game import AliceWon, BobSurvived, Move, dump_transcript, simulate
    from syncgames.game.loop import check_bob_move
    from syncgames.game.strategies import AliceStrategy, BobStrategy, default_omega_cap, make_alice, make_bob

    if side not in ("alice", "bob"):
        _fail(f"--side must be alice or bob, got {side!r}", EXIT_USAGE)
    config = _config()
    sim = config.simulation
    mover = first or sim.first
    if mover not in ("alice", "bob"):
        _fail(f"--first must be alice or bob, got {mover!r}", EXIT_USAGE)
    seed = sim.seed if seed is None else seed
    with _handled():
        dfa = _load_dfa(source, config)
        bound = _bound(k)
    omega_cap = sim.omega_word_cap or default_omega_cap(dfa.n)

    def ask(prompt: str) -> str:
        text = _read_move(prompt)
        if _is_exit_command(text):
            raise KeyboardInterrupt
        return text

    class HumanAlice(AliceStrategy):
        name = "human"

        def choose(self, position) -> int:
            while True:
                try:
                    word = dfa.word(ask(f"Alice, one of {' '.join(dfa.letters)} > "))
                except PreconditionError as e:
                    console.print(f"[red]{e}[/red]")
                    continue
                if len(word) != 1:
                    console.print("[red]Alice plays exactly one letter[/red]")
                    continue
                return word[0]

    class HumanBob(BobStrategy):
        name = "human"

        def respond(self, position):
            while True:
                try:
                    word = dfa.word(ask(f"Bob, a word of length < {bound} ('-' passes) > "))
                    check_bob_move(dfa, bound, word, omega_cap)
                except (PreconditionError, IllegalMoveError) as e:
                    console.print(f"[red]{e}[/red]")
                    continue
                return word

    def show(move: Move) -> None:
        who = "Alice" if move.mover == "alice" else "Bob"
        console.print(f"{who} plays [cyan]{dfa.names(move.word)}[/cyan]")
        console.print(f"  {_board(dfa, move.tokens)}")

    with _handled():
        if side == "alice":
            players = (HumanAlice(), make_bob(opponent, dfa, bound, seed, sim.omega_word_cap))
        else:
            players = (make_alice(opponent, dfa, bound, seed, config.caps), HumanBob())

    console.print(f"{__logo__} k={bound}, you are {side}, {mover} moves first, seed {seed}")
    console.print(f"  {_board(dfa, dfa.states)}")
    try:
        transcript = simulate(
            dfa, bound, *players, first=mover, omega_cap=omega_cap, seed=seed, observer=show,
        )
    except KeyboardInterrupt:
        console.print("\nGoodbye!")
        raise typer.Exit(EXIT_OK)

    outcome = transcript.outcome
    if isinstance(outcome, AliceWon):
        console.print(f"[green]Alice wins after {outcome.at} move(s)[/green]")
    elif isinstance(outcome, BobSurvived):
        console.print(f"[yellow]Bob survives {outcome.horizon} Alice moves[/yellow]")
    if save:
        save.write_text(dump_transcript(transcript, dfa), encoding="utf-8")
        console.print(f"[green]✓[/green] Transcript saved to {save}")
    _result(transcript.winner)


# ============================================================================
# Verification
# ============================================================================


@app.command()
def verify(
    suite: list[str] = typer.Option(["all"], "--suite", "-s", help="Suite name, repeatable; 'all' runs every suite"),
    workers: int | None = typer.Option(None, "--workers", "-w", help="Worker threads (default from config)"),
    list_suites: bool = typer.Option(False, "--list", help="List the suites and exit"),
):
    """Run acceptance suites and print a pass/fail table."""
    from syncgames.verify import default_registry

    registry = default_registry()
    if list_suites:
        table = Table(title="Suites")
        table.add_column("Suite", style="cyan")
        table.add_column("Checks")
        for name in registry.suite_names:
            table.add_row(name, registry.get(name).description)
        console.print(table)
        return

    config = _config()
    with _handled():
        reports = asyncio.run(registry.run(suite, config, workers))

    table = Table(title="Verification")
    table.add_column("Suite", style="cyan")
    table.add_column("Tasks", justify="right")
    table.add_column("Checked", justify="right")
    table.add_column("Failures", justify="right")
    table.add_column("Time", justify="right")
    table.add_column("Status")
    for report in reports:
        status = "[green]✓ pass[/green]" if report.passed else "[red]✗ fail[/red]"
        table.add_row(
            report.name, str(report.tasks), str(report.checked),
            str(len(report.failures)), f"{report.elapsed:.1f}s", status,
        )
    console.print(table)

    failed = [r for r in reports if not r.passed]
    for report in failed:
        for failure in report.failures[:10]:
            err_console.print(f"[red]{report.name}: {failure}[/red]", highlight=False)
        if len(report.failures) > 10:
            err_console.print(f"[dim]{report.name}: {len(report.failures) - 10} more[/dim]")
    _result("pass" if not failed else "fail")
    if failed:
        raise typer.Exit(EXIT_NEGATIVE)


if __name__ == "__main__":
    app()
