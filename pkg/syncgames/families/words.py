"""Named words over the Černý alphabet and known reset words of the families."""

from math import comb

from syncgames.automaton.types import Word
from syncgames.errors import PreconditionError

# letter indices of cerny(n) and of the a,b prefix of d_series(n)
A, B = 0, 1


def _check(n: int) -> None:
    if n < 3:
        raise PreconditionError(f"n must be >= 3, got {n}")


def w_forward(n: int) -> Word:
    """
    Shortest word taking {0,1} to {0, ceil(n/2)} in C_n^[2].

    Its run from {0,1} visits every pair exactly once; length C(n,2)-1.
    """
    _check(n)
    block = (B,) * (n - 1) + (A,)
    if n % 2:
        return block * ((n - 1) // 2 - 1) + (B,) * (n - 1)
    return block * (n // 2 - 1) + (B,) * (n // 2 - 1)


def w_backward(n: int) -> Word:
    """
    Word of length C(n,2) whose run from backward_start(n) visits every pair
    once before reaching the sink of C_n^[2].
    """
    _check(n)
    block = (B,) * (n - 1) + (A,)
    if n % 2:
        return block * ((n - 1) // 2)
    return (B,) * (n // 2 - 1) + (A,) + block * (n // 2 - 1)


def backward_start(n: int) -> tuple[int, int]:
    """Start pair {1, floor(n/2)+1} of the backward Hamiltonian run."""
    _check(n)
    return (1, n // 2 + 1)


def cerny_reset_word(n: int) -> Word:
    """(a b^{n-1})^{n-2} a, of length (n-1)^2."""
    if n < 2:
        raise PreconditionError(f"n must be >= 2, got {n}")
    return ((A,) + (B,) * (n - 1)) * (n - 2) + (A,)


def flower_reset_word(n: int) -> Word:
    """a_1 a_2 a_1 a_3 ... a_{n-1} a_1, of length 2n-3 (letter a_i has index i-1)."""
    _check(n)
    word = [0]
    for k in range(2, n):
        word += [k - 1, 0]
    return tuple(word)


def l_series_reset_word(k: int, m: int) -> Word:
    """v_1 v_2 ... v_{k+m} with v_q = a_q a_{q-k} a_{q-2k} ... down to a_t, 1 <= t <= k."""
    word: list[int] = []
    for q in range(1, k + m + 1):
        i = q
        while i >= 1:
            word.append(i - 1)
            i -= k
    return tuple(word)


def l_series_rt(k: int, m: int) -> int:
    """Closed form k·e(e+1)/2 + r(e+1) with e = (n-1)//k, r = n-1-k·e."""
    n = k + m + 1
    e, r = divmod(n - 1, k)
    return k * e * (e + 1) // 2 + r * (e + 1)


def d_series_level(n: int) -> int:
    """K = C(n,2)-1, the game level of d_series(n)."""
    return comb(n, 2) - 1
