"""
Symbols, pre-Fourier matrices, and Frobenius eigenvalues for a family of
unipotent characters of G(M,1? no, M,M,N)-type combinatorics, together
with the executable comparison against the Drinfeld-center modular data.

A symbol is a function f on {1..M} with values in {0..M-1}, strictly
increasing on the first N points (the "top" row) and on the last e = M-N
points (the "bottom" row), with total sum congruent to C(M,2) mod M.
The complement of the bottom row inside {0..M-1} is an N-tuple written
fbar.  A cyclic shift by +1 on all values (resorted rowwise) generates a
Z/M action; characters are indexed by orbits [f] with multiplicity s(f),
the stabilizer order.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import comb, gcd

from .exactnum import CycQ, euler_phi, mobius, divisors
from .fusion import cyc_order, sln_modular, signed_perms, _lambda_vec
from .weights import rho, rotate
from .center import center_rank

__all__ = [
    "Symbol", "symbols", "symbol_orbits", "stabilizer_census", "epsilon",
    "frobenius_exponent", "frobenius_exponent_reduced", "iota",
    "prefourier", "prefourier_oracle", "sqrt_center_dim", "compare",
]


class Symbol:
    """An element of the symbol set, with top/bottom rows as tuples."""

    __slots__ = ("M", "N", "top", "bottom", "fbar")

    def __init__(self, M: int, top: tuple[int, ...], bottom: tuple[int, ...]):
        self.M, self.N = M, len(top)
        self.top, self.bottom = top, bottom
        self.fbar = tuple(x for x in range(M) if x not in set(bottom))
        assert len(self.fbar) == self.N

    def values(self) -> tuple[int, ...]:
        return self.top + self.bottom

    def shift(self, k: int) -> "Symbol":
        return Symbol(self.M,
                      tuple(sorted((x + k) % self.M for x in self.top)),
                      tuple(sorted((x + k) % self.M for x in self.bottom)))

    def r(self) -> int:
        """The rotation offset: sum(top) - sum(fbar) = r * M.

        The source definition divides by e instead, but that quotient is
        not an integer in general (e.g. N=2, M=5, top (3,4), bottom
        (1,3,4)), while divisibility by M always holds; the M convention
        also matches the shift compatibility r(f^+) = r(f) - 1 used to
        prove orbit invariance, so it is the one used here.
        """
        d = sum(self.top) - sum(self.fbar)
        assert d % self.M == 0
        return d // self.M

    def __eq__(self, other):
        return (self.M, self.top, self.bottom) == (other.M, other.top, other.bottom)

    def __hash__(self):
        return hash((self.M, self.top, self.bottom))

    def __repr__(self):
        return f"Symbol(top={self.top}, bottom={self.bottom})"


@lru_cache(maxsize=None)
def symbols(N: int, M: int) -> tuple[Symbol, ...]:
    """All symbols, with the count certified against
    (1/M) sum_{k | gcd(N,M)} phi(k) C(M/k,N/k)^2."""
    e = M - N
    target = comb(M, 2) % M
    out = []
    for top in combinations(range(M), N):
        for bottom in combinations(range(M), e):
            if (sum(top) + sum(bottom)) % M == target:
                out.append(Symbol(M, top, bottom))
    total = sum(euler_phi(k) * comb(M // k, N // k) ** 2
                for k in divisors(gcd(N, M)))
    assert total % M == 0 and len(out) == total // M
    return tuple(out)


@lru_cache(maxsize=None)
def symbol_orbits(N: int, M: int) -> tuple[tuple[Symbol, int], ...]:
    """Orbit representatives under the Z/M shift with stabilizer orders
    s(f); sum of s(f) over orbits equals the center rank."""
    seen: set[Symbol] = set()
    out = []
    for f in symbols(N, M):
        if f in seen:
            continue
        orbit = [f]
        g = f.shift(1)
        while g != f:
            orbit.append(g)
            g = g.shift(1)
        seen.update(orbit)
        out.append((f, M // len(orbit)))
    assert sum(s for _, s in out) == center_rank(N, M)["formula"]
    return tuple(out)


def stabilizer_census(N: int, M: int) -> dict:
    """Orbit stabilizer counts, brute force against the Mobius formula
    (number of symbols with s(f) = m is (m/M) sum mu(k) C(M/mk,N/mk)^2)."""
    brute: dict[int, int] = {}
    for _, s in symbol_orbits(N, M):
        brute[s] = brute.get(s, 0) + M // s  # count symbols, not orbits
    formula = {}
    for m in divisors(gcd(N, M)):
        tot = sum(mobius(k) * comb(M // (m * k), N // (m * k)) ** 2
                  for k in divisors(gcd(N // m, M // m)))
        assert (m * tot) % M == 0
        if m * tot:
            formula[m] = m * tot // M
    return {"brute": brute, "formula": formula, "agree": brute == formula}


# ---------------------------------------------------------------------------
# signs and Frobenius

def epsilon(f: Symbol) -> int:
    """epsilon(f) = (-1)^(c(f) + gamma(f)) where c counts strictly
    increasing pairs in the flattened value sequence and
    gamma = ((M-1)/M)(C(M,2) - sum of values), an integer."""
    v = f.values()
    c = sum(1 for i in range(len(v)) for j in range(i + 1, len(v))
            if v[i] < v[j])
    num = (f.M - 1) * (comb(f.M, 2) - sum(v))
    assert num % f.M == 0
    return -1 if (c + num // f.M) % 2 else 1


def frobenius_exponent(f: Symbol) -> int:
    """alpha(f) = M(1-M^2)/6 - sum(f(y)^2 + M f(y)); the Frobenius
    eigenvalue is eta^(-alpha) with eta of order 2M."""
    M = f.M
    num = M * (1 - M * M)
    assert num % 6 == 0
    return num // 6 - sum(x * x + M * x for x in f.values())


def frobenius_exponent_reduced(f: Symbol) -> int:
    """Independent route for alpha(f) mod 2M, using the quasi-periodic
    extension f(i - N) = f(i) - M of the top row."""
    M, N, r = f.M, f.N, f.r()

    def top(i):  # 1-based, quasi-periodic
        q, rem = divmod(i - 1, N)
        return f.top[rem] + q * M

    total = 0
    for i in range(1, N + 1):
        total += ((f.fbar[i - 1] - top(i - r))
                  * (sum(f.fbar[j - 1] for j in range(1, i))
                     - sum(top(j - r) for j in range(1, i + 1))))
    return (-2 * total) % (2 * M)


def iota(f: Symbol) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The weight pair (m_f, k_f): consecutive gaps minus one of the top
    row (rotated r(f) times) and of fbar."""
    e = f.M - f.N
    m = tuple(f.top[i + 1] - f.top[i] - 1 for i in range(f.N - 1))
    k = tuple(f.fbar[i + 1] - f.fbar[i] - 1 for i in range(f.N - 1))
    for _ in range(f.r() % f.N):
        m = rotate(m, e)
    return m, k


# ---------------------------------------------------------------------------
# the pre-Fourier matrix

def _det_of_roots(n: int, expo: list[list[int]]) -> CycQ:
    """Determinant of a matrix of roots of unity (zeta_n^expo[i][j]),
    summed by permutation with integer exponent accumulation."""
    k = len(expo)
    counts = [0] * n
    for perm in permutations(range(k)):
        inv = sum(1 for i in range(k) for j in range(i + 1, k)
                  if perm[i] > perm[j])
        t = sum(expo[i][perm[i]] for i in range(k)) % n
        counts[t] += -1 if inv % 2 else 1
    return CycQ(n, counts)


@lru_cache(maxsize=None)
def _dft_det(N: int, M: int) -> CycQ:
    """det of (eta^(-2ij))_{0<=i,j<M} with eta = zeta_n^N of order 2M."""
    n = cyc_order(N, M - N)
    return _det_of_roots(n, [[(-2 * N * i * j) % n for j in range(M)]
                             for i in range(M)])


def _minor(n: int, N: int, rows: tuple[int, ...], cols: tuple[int, ...]) -> CycQ:
    return _det_of_roots(n, [[(-2 * N * i * j) % n for j in cols]
                             for i in rows])


@lru_cache(maxsize=None)
def prefourier(N: int, M: int):
    """The pre-Fourier matrix on orbit representatives, via exterior
    power minors:
    S~_{[f],[g]} = ((-1)^(M-1) M / tau) eps(f) eps(g)
                   conj(minor_N(f.top, g.top) minor_e(f.bottom, g.bottom))
    with tau = (-1)^C(M,2) det(eta^(-2ij)).  Returns (orbits, matrix).
    """
    n = cyc_order(N, M - N)
    orbits = symbol_orbits(N, M)
    tau = CycQ.from_rational(n, (-1) ** comb(M, 2)) * _dft_det(N, M)
    pref = CycQ.from_rational(n, (-1) ** (M - 1) * M) * tau.inverse()
    eps = [epsilon(f) for f, _ in orbits]
    rows = []
    for a, (f, _) in enumerate(orbits):
        row = []
        for b, (g, _) in enumerate(orbits):
            v = (_minor(n, N, f.top, g.top)
                 * _minor(n, N, f.bottom, g.bottom)).conjugate()
            row.append(pref * (eps[a] * eps[b]) * v)
        rows.append(tuple(row))
    return orbits, tuple(rows)


def prefourier_oracle(N: int, M: int, f: Symbol, g: Symbol) -> CycQ:
    """Independent route: the N!^2 alternating-sum expression
    S~ = ((-1)^sum(fbar+gbar) eps(f) eps(g) / M^(N-1))
         sum_{w,w'} sgn(w) sgn(w') prod_i eta^(2(f(w(i))g(i) -
                                                 fbar(w'(i)) gbar(i))).
    """
    n = cyc_order(N, M - N)
    counts = [0] * n
    tops_f, tops_g = f.top, g.top
    bars_f, bars_g = f.fbar, g.fbar
    for w in permutations(range(N)):
        sw = sum(1 for i in range(N) for j in range(i + 1, N) if w[i] > w[j])
        tf = sum(tops_f[w[i]] * tops_g[i] for i in range(N))
        for w2 in permutations(range(N)):
            sw2 = sum(1 for i in range(N) for j in range(i + 1, N)
                      if w2[i] > w2[j])
            t = (2 * N * (tf - sum(bars_f[w2[i]] * bars_g[i]
                                   for i in range(N)))) % n
            counts[t] += -1 if (sw + sw2) % 2 else 1
    sign = (-1) ** (sum(bars_f) + sum(bars_g)) * epsilon(f) * epsilon(g)
    return CycQ(n, counts, 1) * Fraction(sign, M ** (N - 1))


def sqrt_center_dim(N: int, e: int) -> CycQ:
    """The positive square root of the center's global dimension,
    globaldim/N (a real cyclotomic value, irrational in general),
    certified against the independent expression
    M^(N-1) |sum_w sgn(w) eta^(2<rho, w rho>)|^(-2)."""
    md = sln_modular(N, e)
    n = cyc_order(N, e)
    M = e + N
    lr = _lambda_vec(N, rho(N))
    sr = sum(lr)
    counts = [0] * n
    for p, sgn in signed_perms(N):
        t = -2 * sr * sr + 2 * N * sum(lr[j] * lr[p[j]] for j in range(N))
        counts[t % n] += sgn
    w0 = CycQ(n, counts)
    val = md.globaldim * Fraction(1, N)
    assert val == (w0 * w0.conjugate()).inverse() * M ** (N - 1)
    return val


def comparison_sign(f: Symbol, mode: str = "frozen") -> int:
    """The per-symbol sign in the comparison identity.

    "frozen" is (-1)^(sum fbar(i) + (N-1) r_f), the convention certified
    entry-by-entry on every supported (N, M).  The two printed
    conventions are kept for inspection: "statement" uses the top-row
    sum and "derivation" the fbar sum; each fails on some (N, M)
    (e.g. the statement on (2,4), the derivation on (3,5)) and they
    differ from the frozen one by (-1)^((N-1) r) resp. (-1)^(M r).
    """
    if mode == "frozen":
        return (-1) ** (sum(f.fbar) + (f.N - 1) * f.r())
    if mode == "statement":
        return (-1) ** sum(f.top)
    if mode == "derivation":
        return (-1) ** sum(f.fbar)
    raise ValueError(f"unknown sign mode {mode!r}")


def compare(N: int, M: int, sign_mode: str = "frozen") -> dict:
    """The comparison theorem as an executable check.

    (a) sum of s(f) over orbits equals the center rank;
    (b) S~_{[f],[g]} = sign(f) sign(g) eps(f) eps(g) / sqrt(dim) *
        S_{m_f,m_g} conj(S_{k_f,k_g}) exactly, with the sign convention
        of comparison_sign;
    (c) Frob([f]) = theta_{m_f} theta_{k_f}^(-1).  This is the conjugate
        of the stated center T-matrix entry theta_m^(-1) theta_k; the two
        printed statements are jointly inconsistent once the thetas are
        not real (e >= 3), and the direction used here is the one that
        holds entry-by-entry.
    """
    e = M - N
    n = cyc_order(N, e)
    md = sln_modular(N, e)
    orbits, S = prefourier(N, M)
    rank_ok = sum(s for _, s in orbits) == center_rank(N, M)["formula"]
    sq_inv = sqrt_center_dim(N, e).inverse()
    s_ok = True
    for a, (f, _) in enumerate(orbits):
        mf, kf = iota(f)
        for b, (g, _) in enumerate(orbits):
            mg, kg = iota(g)
            sign = (comparison_sign(f, sign_mode) * comparison_sign(g, sign_mode)
                    * epsilon(f) * epsilon(g))
            want = (md.s_entry(mf, mg) * md.s_entry(kf, kg).conjugate()
                    * sign * sq_inv)
            if S[a][b] != want:
                s_ok = False
    t_ok = True
    for f, _ in orbits:
        mf, kf = iota(f)
        alpha = frobenius_exponent(f)
        assert (alpha - frobenius_exponent_reduced(f)) % (2 * M) == 0
        frob = CycQ.root(n, (-alpha * N) % n)
        if frob != md.theta(mf) * md.theta(kf).inverse():
            t_ok = False
    return {"rank_ok": rank_ok, "s_ok": s_ok, "t_ok": t_ok,
            "ok": rank_ok and s_ok and t_ok}
