"""
Nhedral Hecke algebras of level e: the Kazhdan-Lusztig style basis
{1} u {C^m_i}, exact multiplication through the letter action
theta_(j+k) C^m_i = [N]! C^m_i (k = 0) or kappa sum_l C^(m + w_l^k)_i,
the one-dimensional representations, and the N-dimensional point
representations attached to the vanishing variety, including the full
simple-census yielding semisimplicity numerology.

Elements are stored on the KL basis with integer Laurent coefficients
in the generic parameter v; kappa = [N-1]! and [N]! = kappa [N].
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd

from .chebyshev import constant_terms, d_table
from .exactnum import CycQ, LaurentZ, MixedScalar, qfact, qnum
from .koornwinder import KPoint, variety
from .weights import Weight, alcove, central_char, fund_weights, p_number

__all__ = [
    "HeckeAlgebra", "hecke", "dim_nhecke", "one_dim_reps", "sigma_rep",
    "check_sigma_rep", "rep_census",
]

UNIT = "1"


def dim_nhecke(N: int, e: int) -> int:
    """dim of the level-e algebra: 1 + N p_{N,e}."""
    return 1 + N * p_number(N, e)


class HeckeAlgebra:
    """The level-e algebra on the basis {1} u {C^m_i : i in I, m in
    X+(e)}.  Elements are dicts key -> LaurentZ with keys UNIT or
    (i, m)."""

    def __init__(self, N: int, e: int):
        self.N, self.e = N, e
        self.alc = alcove(N, e)
        self.kappa = qfact(N - 1)
        self.qN = qnum(N)
        self.full = qfact(N)  # [N]! = kappa [N]
        self.dt = d_table(N, e)
        self.keys = [UNIT] + [(i, m) for i in range(N) for m in self.alc]
        assert len(self.keys) == dim_nhecke(N, e)
        self._fund = {k: fund_weights(N, k) for k in range(1, N)}

    # -- elements ----------------------------------------------------------

    def unit(self) -> dict:
        return {UNIT: LaurentZ(1)}

    def kl(self, i: int, m: Weight) -> dict:
        return {(i % self.N, m): LaurentZ(1)}

    def theta(self, i: int) -> dict:
        """theta_i = C^0_i."""
        return self.kl(i, (0,) * (self.N - 1))

    def end_color(self, key) -> int:
        i, m = key
        return (i + central_char(m)) % self.N

    # -- the letter action -------------------------------------------------

    @lru_cache(maxsize=None)
    def _letter_red(self, j: int, key) -> tuple:
        """theta_j applied to a basis element, with the uniform kappa
        factor stripped: each entry is (key, [N]-power).  The true action
        multiplies every listed term by kappa in addition (and by nothing
        when key is the unit)."""
        if key == UNIT:
            return (((j, (0,) * (self.N - 1)), 0),)
        i, m = key
        k = (j - self.end_color(key)) % self.N
        if k == 0:
            return ((key, 1),)
        out = []
        for w in self._fund[k]:
            m2 = tuple(a + b for a, b in zip(m, w))
            if min(m2) >= 0 and sum(m2) <= self.e:
                out.append(((i, m2), 0))
        return tuple(out)

    def _word_apply_red(self, word, elt: dict) -> dict:
        cur = elt
        qN = self.qN
        for letter in word:
            out: dict = {}
            for key, c in cur.items():
                for key2, p in self._letter_red(letter, key):
                    v = c * qN if p else c
                    out[key2] = out[key2] + v if key2 in out else v
            cur = out
        return cur

    def theta_apply(self, j: int, elt: dict) -> dict:
        """theta_j times elt, with true kappa factors."""
        j %= self.N
        out: dict = {}
        for key, c in elt.items():
            scale = c if key == UNIT else c * self.kappa
            for key2, p in self._letter_red(j, key):
                v = scale * qnum(self.N) if p else scale
                out[key2] = out[key2] + v if key2 in out else v
        return {k: v for k, v in out.items() if not v.is_zero()}

    def _word(self, i: int, k: Weight) -> list[int]:
        """The letter sequence of r^k_i (applied first-to-last)."""
        letters = [i % self.N]
        cur = i
        for j in range(1, self.N):
            for _ in range(k[j - 1]):
                cur = (cur + j) % self.N
                letters.append(cur)
        return letters

    def multiply(self, a: dict, b: dict) -> dict:
        out: dict = {}

        def acc(elt, scale):
            for key, c in elt.items():
                v = c * scale
                out[key] = out[key] + v if key in out else v

        if UNIT in a:
            acc(b, a[UNIT])
        # applying the Sk+1 letters of r^k_i contributes exactly one
        # kappa per letter on non-unit terms and skips the first kappa on
        # the unit, so after the kappa^(-Sk) in the KL expansion the net
        # factor is kappa (non-unit part of b) or 1 (unit part)
        b_unit = b.get(UNIT)
        b_rest = {k: v for k, v in b.items() if k != UNIT}
        for key, ca in a.items():
            if key == UNIT:
                continue
            i, m = key
            for k, dk in self.dt.d_row(m).items():
                # r^k_i = theta_(last letter) ... theta_i, so acting on b
                # applies the word first letter (= theta_i) first
                word = self._word(i, k)
                if b_unit is not None:
                    acc(self._word_apply_red(word, {UNIT: b_unit}), ca * dk)
                if b_rest:
                    acc(self._word_apply_red(word, b_rest),
                        ca * dk * self.kappa)
        return {k: v for k, v in out.items() if not v.is_zero()}

    # -- structural checks -------------------------------------------------

    def check_relations(self) -> bool:
        """theta_i^2 = [N]! theta_i and fundamental commutativity
        theta_(k+i+j) theta_(k+i) theta_k = theta_(k+i+j) theta_(k+j)
        theta_k, as KL-basis identities."""
        N = self.N
        for i in range(N):
            lhs = self.multiply(self.theta(i), self.theta(i))
            rhs = {k: v * self.full for k, v in self.theta(i).items()}
            if lhs != rhs:
                return False
        for k in range(N):
            for i in range(1, N):
                for j in range(1, N):
                    l1 = self.multiply(
                        self.theta(k + i + j),
                        self.multiply(self.theta(k + i), self.theta(k)))
                    l2 = self.multiply(
                        self.theta(k + i + j),
                        self.multiply(self.theta(k + j), self.theta(k)))
                    if l1 != l2:
                        return False
        return True

    def check_associativity(self, triples) -> bool:
        for a, b, c in triples:
            if self.multiply(self.multiply(a, b), c) != \
                    self.multiply(a, self.multiply(b, c)):
                return False
        return True

    def check_positivity(self) -> bool:
        """All structure constants of KL basis products lie in
        Z_{>=0}[v, v^-1]."""
        basis = [self.unit()] + [self.kl(i, m) for i in range(self.N)
                                 for m in self.alc]
        for a in basis:
            for b in basis:
                for c in self.multiply(a, b).values():
                    if not c.nonneg():
                        return False
        return True


@lru_cache(maxsize=None)
def hecke(N: int, e: int) -> HeckeAlgebra:
    return HeckeAlgebra(N, e)


# ---------------------------------------------------------------------------
# one-dimensional representations

def one_dim_reps(N: int, e: int) -> dict:
    """The one-dimensional representations: the zero map always; the N
    maps theta_i -> [N]!, theta_j -> 0 (j != i) exactly when every
    degree-(e+1) KL generator evaluates to zero, which happens iff all
    the constant terms d^0_m (sum m = e+1) vanish, iff e = 0 mod N.
    The generator evaluation is performed, not assumed."""
    ct = constant_terms(N, e)
    # under theta_i -> lambda, theta_j -> 0, the generator C^m_j of the
    # vanishing ideal evaluates to delta_{ij} d^0_m lambda, since every
    # path word with a nonzero step leaves color i
    extra_valid = all(v == 0 for v in ct["constant_terms"].values())
    assert extra_valid == (e % N == 0)
    reps = [("zero",) + (0,) * N]
    if extra_valid:
        for i in range(N):
            lam = [0] * N
            lam[i] = 1  # times [N]!
            reps.append((f"full@{i}",) + tuple(lam))
    return {"reps": reps, "count": len(reps),
            "expected": N + 1 if e % N == 0 else 1}


# ---------------------------------------------------------------------------
# point representations

def sigma_rep(N: int, e: int, k: Weight):
    """The N-dimensional representation at the variety point over k:
    theta_i acts by kappa times the matrix supported on row i with [N]
    on the diagonal and Z_(j-i)(sigma) in column j."""
    pt = variety(N, e).point(k)
    n = pt.z[0].n
    kap = MixedScalar.from_laurent(n, qfact(N - 1))
    qN = MixedScalar.from_laurent(n, qnum(N))
    zero = MixedScalar(n)
    mats = []
    for i in range(N):
        rows = []
        for r in range(N):
            if r != i:
                rows.append([zero] * N)
                continue
            row = []
            for j in range(N):
                if j == i:
                    row.append(kap * qN)
                else:
                    row.append(kap * MixedScalar.from_cyc(pt.z[(j - i) % N - 1]))
            rows.append(row)
        mats.append(rows)
    return mats


def _mat_mul(a, b, zero):
    N = len(a)
    return [[sum((a[i][k] * b[k][j] for k in range(N)), zero)
             for j in range(N)] for i in range(N)]


def check_sigma_rep(N: int, e: int, k: Weight) -> bool:
    """Exact check that the point matrices satisfy the defining
    relations and kill the level-e vanishing ideal."""
    mats = sigma_rep(N, e, k)
    n = variety(N, e).point(k).z[0].n
    zero = MixedScalar(n)
    full = MixedScalar.from_laurent(n, qfact(N))

    def scaled(mat, s):
        return [[s * x for x in row] for row in mat]

    for i in range(N):
        if _mat_mul(mats[i], mats[i], zero) != scaled(mats[i], full):
            return False
    for kk in range(N):
        for i in range(1, N):
            for j in range(1, N):
                l1 = _mat_mul(mats[(kk + i + j) % N],
                              _mat_mul(mats[(kk + i) % N], mats[kk], zero),
                              zero)
                l2 = _mat_mul(mats[(kk + i + j) % N],
                              _mat_mul(mats[(kk + j) % N], mats[kk], zero),
                              zero)
                if l1 != l2:
                    return False
    # vanishing ideal: evaluate kappa^(sum k) C^m_i for all sum m = e + 1
    dt = d_table(N, e + 1)
    kap = MixedScalar.from_laurent(n, qfact(N - 1))
    alg = hecke(N, e)
    zmat = [[zero] * N for _ in range(N)]
    for m in alcove(N, e + 1):
        if sum(m) != e + 1:
            continue
        for i in range(N):
            acc = [row[:] for row in zmat]
            for kk, dk in dt.d_row(m).items():
                prod = None
                for letter in alg._word(i, kk):
                    mm = mats[letter % N]
                    prod = mm if prod is None else _mat_mul(mm, prod, zero)
                pad = zero + MixedScalar.from_laurent(n, LaurentZ(dk))
                for _ in range((e + 1) - sum(kk)):
                    pad = pad * kap
                for r in range(N):
                    for c in range(N):
                        acc[r][c] = acc[r][c] + pad * prod[r][c]
            if any(not x.is_zero() for row in acc for x in row):
                return False
    return True


def rep_census(N: int, e: int) -> dict:
    """Simple representations: the zero one-dimensional rep plus, for
    each rotation orbit of variety points with stabilizer order m, m
    simples of dimension N/m.  Certifies sum(dim^2) = dim of the
    algebra."""
    v = variety(N, e)
    dims: list[int] = [1]
    for k, (oid, pos, stab) in v.orbits.items():
        if pos:
            continue
        dims.extend([N // stab] * stab)
    total = sum(d * d for d in dims)
    return {"dims": sorted(dims), "sum_squares": total,
            "algebra_dim": dim_nhecke(N, e),
            "agree": total == dim_nhecke(N, e)}
