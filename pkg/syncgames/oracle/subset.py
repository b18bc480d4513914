"""Exact reset thresholds by breadth-first search over subsets of states."""

from array import array
from dataclasses import dataclass

from loguru import logger

from syncgames.automaton.types import Dfa, Word
from syncgames.config.schema import CapsConfig
from syncgames.errors import CapExceededError


@dataclass(frozen=True)
class SubsetBfsResult:
    """rt and a lexicographically least shortest reset word; both None when not synchronizing."""
    rt: int | None
    witness: Word | None
    explored: int

    @property
    def synchronizing(self) -> bool:
        return self.rt is not None


def _image_tables(dfa: Dfa) -> list[list[int]]:
    """Per letter, the image bitmask of every byte-sized chunk of a state mask."""
    tables = []
    for a in range(dfa.m):
        column = [1 << dfa.delta[q][a] for q in range(dfa.n)]
        chunks = []
        for base in range(0, dfa.n, 8):
            table = [0] * 256
            for byte in range(1, 256):
                low = byte & -byte
                bit = low.bit_length() - 1
                q = base + bit
                table[byte] = table[byte ^ low] | (column[q] if q < dfa.n else 0)
            chunks.append(table)
        tables.append(chunks)
    return tables


def _image(chunks: list[list[int]], mask: int) -> int:
    out = 0
    i = 0
    while mask:
        out |= chunks[i][mask & 0xFF]
        mask >>= 8
        i += 1
    return out


def rt_exact(dfa: Dfa, caps: CapsConfig | None = None) -> SubsetBfsResult:
    """
    Breadth-first search from Q down to the first singleton.

    Letters are tried in index order and every mask keeps its first parent,
    so the word read back is the lexicographically least among the shortest.
    """
    caps = caps or CapsConfig()
    if dfa.n > caps.rt_states:
        raise CapExceededError("subset search", dfa.n, caps.rt_states)
    full = (1 << dfa.n) - 1
    if dfa.n == 1:
        return SubsetBfsResult(0, (), 1)

    tables = _image_tables(dfa)
    parent = array("l", [-1]) * (full + 1)
    via = bytearray(full + 1) if dfa.m < 256 else None
    via_wide: dict[int, int] = {}
    parent[full] = full
    frontier = [full]
    depth = 0
    explored = 1
    target = -1
    while frontier and target < 0:
        depth += 1
        layer = []
        for mask in frontier:
            for a, chunks in enumerate(tables):
                image = _image(chunks, mask)
                if parent[image] != -1:
                    continue
                parent[image] = mask
                if via is not None:
                    via[image] = a
                else:
                    via_wide[image] = a
                explored += 1
                if image & (image - 1) == 0:
                    target = image
                    break
                layer.append(image)
            if target >= 0:
                break
        frontier = layer

    if target < 0:
        logger.debug("Subset search: {} subsets explored, not synchronizing", explored)
        return SubsetBfsResult(None, None, explored)

    word = []
    mask = target
    while mask != full:
        word.append(via[mask] if via is not None else via_wide[mask])
        mask = parent[mask]
    word.reverse()
    logger.debug("Subset search: rt={} after {} subsets", depth, explored)
    return SubsetBfsResult(depth, tuple(word), explored)
