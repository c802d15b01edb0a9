"""
The level-e fusion ring of Rep_eta(sl_N): truncated minuscule fusion,
fusion matrices, the exact S- and T-matrices over Q(zeta_{2NM}), quantum
dimensions, the global dimension, and a numeric Verlinde-formula oracle.

Session convention: M = e + N, eta = zeta_{2M}, and every scalar lives in
Q(zeta_n) with n = 2*N*M.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

import mpmath
import numpy as np

from .exactnum import CycQ
from .weights import (Weight, alcove, alcove_index, is_dominant, p_number,
                      rho, fund_weights, rotate, transpose)

__all__ = [
    "cyc_order", "fuse_fund", "fusion_matrix", "SlnModularData",
    "sln_modular", "verlinde_oracle", "signed_perms",
    "check_s_squared", "check_rotation_matrix",
]


def cyc_order(N: int, e: int) -> int:
    return 2 * N * (e + N)


@lru_cache(maxsize=None)
def signed_perms(N: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """All permutations of range(N) with their signatures."""
    out = []
    for p in permutations(range(N)):
        inv = sum(1 for i in range(N) for j in range(i + 1, N)
                  if p[i] > p[j])
        out.append((p, -1 if inv % 2 else 1))
    return tuple(out)


def fuse_fund(N: int, e: int, i: int, m: Weight) -> dict[Weight, int]:
    """L_{omega_i} (x) L_m at level e: weight shifts that stay dominant
    with coordinate sum <= e.  Minuscule, so all multiplicities are 1."""
    if sum(m) > e or not is_dominant(m):
        raise ValueError(f"{m} not in the level-{e} alcove")
    out: dict[Weight, int] = {}
    for w in fund_weights(N, i):
        t = tuple(a + b for a, b in zip(m, w))
        if is_dominant(t) and sum(t) <= e:
            out[t] = out.get(t, 0) + 1
    return out


@lru_cache(maxsize=None)
def fusion_matrix(N: int, e: int, i: int) -> tuple[tuple[int, ...], ...]:
    """Fusion matrix of L_{omega_i} over the alcove: row m, column m'."""
    alc = alcove(N, e)
    idx = alcove_index(N, e)
    rows = []
    for m in alc:
        row = [0] * len(alc)
        for t, c in fuse_fund(N, e, i, m).items():
            row[idx[t]] += c
        rows.append(tuple(row))
    return tuple(rows)


# ---------------------------------------------------------------------------
# modular data

def _lambda_vec(N: int, shifted: Weight) -> tuple[int, ...]:
    """Partition-style coordinates: lambda_j = sum_{i>=j} x_i, lambda_N=0."""
    out = []
    acc = 0
    for c in reversed(shifted):
        acc += c
        out.append(acc)
    out.reverse()
    return tuple(out + [0])


class SlnModularData:
    """Exact (S, T) data of Rep_eta(sl_N) at level e.

    S is normalized with S_{0,0} = 1 (quotient of Weyl alternating sums);
    T entries are eta^{<m, m+2rho>}; qdim_m = S_{0,m};
    globaldim = sum of qdim^2.
    """

    def __init__(self, N: int, e: int):
        self.N, self.e = N, e
        self.M = e + N
        self.n = cyc_order(N, e)
        self.alc = alcove(N, e)
        self.index = alcove_index(N, e)
        n = self.n
        r = rho(N)
        lam = {m: _lambda_vec(N, tuple(a + b for a, b in zip(m, r)))
               for m in self.alc}
        perms = signed_perms(N)

        def weyl_sum(lm, lk) -> CycQ:
            # sum_w sgn(w) eta^{2 <m+rho, w(k+rho)>}; the exponent on
            # zeta_n is 2N sum_j lm_j lk_{w(j)} - 2 s(lm) s(lk)
            sm, sk = sum(lm), sum(lk)
            vec = [0] * n
            for p, sgn in perms:
                t = -2 * sm * sk
                for j in range(N):
                    t += 2 * N * lm[j] * lk[p[j]]
                vec[t % n] += sgn
            return CycQ(n, vec)

        w0 = weyl_sum(lam[(0,) * (N - 1)], lam[(0,) * (N - 1)])
        w0inv = w0.inverse()
        self.S: list[list[CycQ]] = []
        for m in self.alc:
            row = []
            for k in self.alc:
                if self.index[k] < self.index[m]:
                    row.append(self.S[self.index[k]][self.index[m]])
                else:
                    row.append(weyl_sum(lam[m], lam[k]) * w0inv)
            self.S.append(row)
        # T_m = eta^{<m, m+2rho>} = zeta_n^{N <m, m+2rho>}
        self.T: list[CycQ] = []
        for m in self.alc:
            lm = _lambda_vec(N, m)
            # N<m, m+2rho> = N(<m,m> + 2<m,rho>), via lambda coordinates:
            # <x,y> = sum lx_j ly_j - s(lx)s(ly)/N
            lr = _lambda_vec(N, r)
            sx, sr = sum(lm), sum(lr)
            t = (N * sum(a * a for a in lm) - sx * sx
                 + 2 * (N * sum(a * b for a, b in zip(lm, lr)) - sx * sr))
            self.T.append(CycQ.root(self.n, t))
        self.qdims = [self.S[0][i] for i in range(len(self.alc))]
        g = CycQ.zero(self.n)
        for q in self.qdims:
            g = g + q * q
        self.globaldim = g

    def s_entry(self, m: Weight, k: Weight) -> CycQ:
        return self.S[self.index[m]][self.index[k]]

    def t_entry(self, m: Weight) -> CycQ:
        return self.T[self.index[m]]

    def theta(self, m: Weight) -> CycQ:
        return self.t_entry(m)

    def embed_s(self, precision: int = 50) -> np.ndarray:
        """Numeric S-matrix as complex128, evaluated from single roots at
        the given working precision."""
        n = self.n
        with mpmath.workdps(precision):
            roots = [complex(mpmath.expjpi(mpmath.mpf(2 * k) / n))
                     for k in range(n)]
        roots = np.array(roots)
        p = len(self.alc)
        out = np.zeros((p, p), dtype=complex)
        for i in range(p):
            for j in range(p):
                x = self.S[i][j]
                acc = 0j
                for k, c in enumerate(x.vec):
                    if c:
                        acc += c * roots[k]
                out[i, j] = acc / x.den
        return out


@lru_cache(maxsize=None)
def sln_modular(N: int, e: int) -> SlnModularData:
    return SlnModularData(N, e)


# ---------------------------------------------------------------------------
# Verlinde oracle

def verlinde_oracle(N: int, e: int, precision: int = 50,
                    certify_gap: float = 0.1) -> list[np.ndarray]:
    """Fundamental fusion matrices recovered from the Verlinde formula via
    the numeric embedding; every value must land within `certify_gap` of a
    nonnegative integer or a certification error is raised."""
    md = sln_modular(N, e)
    S = md.embed_s(precision)
    p = len(md.alc)
    d0 = S[0]  # qdims
    glob = float(np.sum(np.abs(d0) ** 2).real)
    out = []
    for i in range(1, N):
        a = md.index[tuple(1 if j == i - 1 else 0 for j in range(N - 1))]
        diag = S[a] / d0
        mat = (S * diag) @ S.conj().T / glob
        ints = np.rint(mat.real)
        err = np.max(np.abs(mat - ints))
        if err > certify_gap:
            raise ArithmeticError(
                f"Verlinde certification failed: off by {err}")
        if ints.min() < 0:
            raise ArithmeticError("negative Verlinde multiplicity")
        out.append(ints.astype(int))
    return out


def check_s_squared(N: int, e: int) -> bool:
    """S^2 = globaldim times the permutation matrix of duality m -> m^T."""
    md = sln_modular(N, e)
    p = len(md.alc)
    for i, m in enumerate(md.alc):
        for j in range(p):
            acc = CycQ.zero(md.n)
            for x in range(p):
                acc = acc + md.S[i][x] * md.S[x][j]
            want = (md.globaldim
                    if md.index[transpose(md.alc[j])] == i else CycQ.zero(md.n))
            if acc != want:
                return False
    return True


def check_rotation_matrix(N: int, e: int) -> bool:
    """The fusion matrix of L_{e omega_1} is the permutation matrix of the
    alcove rotation.  Computed by composing e fundamental fusions and
    picking the L_{e omega_1}-isotypic block is overkill; instead check
    directly that rotation permutes fusion matrices:
    A_i[m^->, k^->] = A_i[m, k]."""
    idx = alcove_index(N, e)
    for i in range(1, N):
        A = fusion_matrix(N, e, i)
        for m in alcove(N, e):
            for k in alcove(N, e):
                if A[idx[m]][idx[k]] != A[idx[rotate(m, e)]][idx[rotate(k, e)]]:
                    return False
    return True
