"""
sl_N weight-lattice combinatorics: dominant weights in fundamental
coordinates, the Gram inner product, central characters (colors), the
cyclic rotation on the level-e alcove, stabilizer censuses, and the
weights of the fundamental representations.

A weight of rank N is a tuple of N-1 integers (coefficients on
omega_1..omega_{N-1}).  The level-e alcove X+(e) is enumerated in a fixed
total order: graded by coordinate sum, then lexicographic.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb

from .exactnum import mobius

__all__ = [
    "Weight", "rank_of", "rho", "inner", "central_char", "rotate",
    "transpose", "alcove", "alcove_index", "p_number", "orbit",
    "stabilizer_order", "orbit_table", "stab_census", "stab_formula",
    "fund_weights", "is_dominant",
]

Weight = tuple[int, ...]


def rank_of(m: Weight) -> int:
    return len(m) + 1


def rho(N: int) -> Weight:
    return (1,) * (N - 1)


def is_dominant(m: Weight) -> bool:
    return all(c >= 0 for c in m)


@lru_cache(maxsize=None)
def _gram(N: int) -> tuple[tuple[Fraction, ...], ...]:
    # <omega_i, omega_j> = min(i,j) - i*j/N
    return tuple(
        tuple(Fraction(min(i, j)) - Fraction(i * j, N)
              for j in range(1, N))
        for i in range(1, N))


def inner(a: Weight, b: Weight) -> Fraction:
    """Bilinear extension of <omega_i, omega_j> = min(i,j) - ij/N."""
    if len(a) != len(b):
        raise ValueError("rank mismatch")
    g = _gram(len(a) + 1)
    out = Fraction(0)
    for i, x in enumerate(a):
        if x:
            row = g[i]
            for j, y in enumerate(b):
                if y:
                    out += x * y * row[j]
    return out


def central_char(m: Weight) -> int:
    """Color chi_c(m) = m_1 + 2 m_2 + ... + (N-1) m_{N-1} mod N."""
    N = rank_of(m)
    return sum((i + 1) * c for i, c in enumerate(m)) % N


def rotate(m: Weight, e: int) -> Weight:
    """The cyclic action m -> (e - sum(m), m_1, ..., m_{N-2}) on X+(e)."""
    s = sum(m)
    if s > e or not is_dominant(m):
        raise ValueError(f"{m} is not in the level-{e} alcove")
    return (e - s,) + m[:-1]


def transpose(m: Weight) -> Weight:
    """Duality m -> reversed coordinates."""
    return m[::-1]


def p_number(N: int, e: int) -> int:
    """Alcove size p_{N,e} = C(e+N-1, N-1)."""
    return comb(e + N - 1, N - 1)


@lru_cache(maxsize=None)
def alcove(N: int, e: int) -> tuple[Weight, ...]:
    """X+(e), graded by coordinate sum then lexicographic."""
    out: list[Weight] = []
    for s in range(e + 1):
        level: list[Weight] = []

        def rec(prefix: tuple[int, ...], rem: int):
            if len(prefix) == N - 2:
                level.append(prefix + (rem,))
                return
            for c in range(rem + 1):
                rec(prefix + (c,), rem - c)

        if N == 2:
            level.append((s,))
        else:
            for c in range(s + 1):
                rec((c,), s - c)
        # rec enumerates with remaining sum fixed = s; sort each block lex
        out.extend(sorted(level))
    assert len(out) == p_number(N, e)
    return tuple(out)


@lru_cache(maxsize=None)
def alcove_index(N: int, e: int) -> dict[Weight, int]:
    return {m: i for i, m in enumerate(alcove(N, e))}


def orbit(m: Weight, e: int) -> list[Weight]:
    """Orbit of m under rotation, starting at m."""
    out = [m]
    cur = rotate(m, e)
    while cur != m:
        out.append(cur)
        cur = rotate(cur, e)
    return out


def stabilizer_order(m: Weight, e: int) -> int:
    N = rank_of(m)
    return N // len(orbit(m, e))


@lru_cache(maxsize=None)
def orbit_table(N: int, e: int) -> dict[Weight, tuple[int, int, int]]:
    """Map each alcove member to (orbit id, position in orbit, stabilizer
    order).  Orbit ids are assigned in alcove order of the minimal member."""
    out: dict[Weight, tuple[int, int, int]] = {}
    oid = 0
    for m in alcove(N, e):
        if m in out:
            continue
        orb = orbit(m, e)
        stab = N // len(orb)
        for pos, w in enumerate(orb):
            out[w] = (oid, pos, stab)
        oid += 1
    return out


def stab_formula(N: int, e: int, m: int) -> int:
    """Count of alcove weights with stabilizer of order m, by the Moebius
    formula (N/M) sum_{k | g} mu(k) C(M/mk, N/mk), g = gcd(N/m, M/m)."""
    M = e + N
    if N % m or M % m:
        return 0
    from math import gcd
    g = gcd(N // m, M // m)
    total = 0
    for k in range(1, g + 1):
        if g % k == 0:
            total += mobius(k) * comb(M // (m * k), N // (m * k))
    assert (total * N) % M == 0
    return total * N // M


def stab_census(N: int, e: int) -> dict:
    """Brute-force stabilizer census of X+(e) with the formula cross-check."""
    counts: dict[int, int] = {}
    for m, (_, _, stab) in orbit_table(N, e).items():
        counts[stab] = counts.get(stab, 0) + 1
    formula = {s: stab_formula(N, e, s) for s in counts}
    return {
        "rank": N, "level": e, "total": p_number(N, e),
        "counts": counts, "formula": formula,
        "agree": counts == {s: v for s, v in formula.items() if v},
    }


# ---------------------------------------------------------------------------
# weights of the fundamental representations

@lru_cache(maxsize=None)
def fund_weights(N: int, i: int) -> tuple[Weight, ...]:
    """The C(N,i) weights of L_{omega_i} in fundamental coordinates.

    An i-element subset S of {1..N} in epsilon-coordinates maps to the
    weight with j-th coordinate [j in S] - [j+1 in S].  The highest weight
    (S = {1..i}) is omega_i and the member list sums to zero.
    """
    if not 1 <= i <= N - 1:
        raise ValueError("fundamental index out of range")
    out = []
    for S in combinations(range(1, N + 1), i):
        sset = set(S)
        w = tuple((1 if j in sset else 0) - (1 if j + 1 in sset else 0)
                  for j in range(1, N))
        out.append(w)
    return tuple(out)
