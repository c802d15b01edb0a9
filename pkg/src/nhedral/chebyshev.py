"""
Chebyshev polynomials U_m for sl_N and the change-of-basis table d^k_m.

The monomial basis is X^k = X_1^{k_1} ... X_{N-1}^{k_{N-1}} in the
fundamental characters; the simple basis is L_m.  The mult table
decomposes X^k into simples by iterated minuscule Pieri steps; the d
table is its (unitriangular) inverse, so U_m = sum_k d^k_m X^k.
"""

from __future__ import annotations

from functools import lru_cache

from .weights import (Weight, alcove, central_char, fund_weights,
                      is_dominant, rank_of)

__all__ = [
    "NPoly", "DTable", "mult_table", "d_table", "u_poly", "x_mono",
    "recursion_check", "duality_check", "constant_terms",
    "constant_term_criterion", "sympower_check", "eval_monomials",
]


class NPoly:
    """Integer polynomial in X_1..X_{N-1}, stored sparsely by exponent
    vector."""

    __slots__ = ("N", "c")

    def __init__(self, N: int, c: dict[Weight, int] | None = None):
        self.N = N
        self.c = {k: x for k, x in (c or {}).items() if x}

    @staticmethod
    def one(N: int) -> "NPoly":
        return NPoly(N, {(0,) * (N - 1): 1})

    @staticmethod
    def gen(N: int, i: int) -> "NPoly":
        """The variable X_i."""
        k = [0] * (N - 1)
        k[i - 1] = 1
        return NPoly(N, {tuple(k): 1})

    def __add__(self, other):
        out = dict(self.c)
        for k, x in other.c.items():
            out[k] = out.get(k, 0) + x
        return NPoly(self.N, out)

    def __neg__(self):
        return NPoly(self.N, {k: -x for k, x in self.c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return NPoly(self.N, {k: other * x for k, x in self.c.items()})
        out: dict[Weight, int] = {}
        for k1, x1 in self.c.items():
            for k2, x2 in other.c.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                out[k] = out.get(k, 0) + x1 * x2
        return NPoly(self.N, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, NPoly):
            return NotImplemented
        return self.N == other.N and self.c == other.c

    def is_zero(self) -> bool:
        return not self.c

    def constant_term(self) -> int:
        return self.c.get((0,) * (self.N - 1), 0)

    def substitute_reversed(self) -> "NPoly":
        """X_i -> X_{N-i} (the duality substitution)."""
        return NPoly(self.N, {k[::-1]: x for k, x in self.c.items()})

    def __repr__(self):
        if not self.c:
            return "0"
        parts = []
        for k in sorted(self.c, key=lambda k: (sum(k), k)):
            x = self.c[k]
            mono = "*".join(f"X{i+1}^{a}" if a > 1 else f"X{i+1}"
                            for i, a in enumerate(k) if a)
            if not mono:
                parts.append(str(x))
            elif x == 1:
                parts.append(mono)
            elif x == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{x}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _pieri_step(state: dict[Weight, int], N: int, i: int) -> dict[Weight, int]:
    """Tensor a simple-decomposition by the minuscule L_{omega_i}."""
    out: dict[Weight, int] = {}
    for m, mult in state.items():
        for w in fund_weights(N, i):
            t = tuple(a + b for a, b in zip(m, w))
            if is_dominant(t):
                out[t] = out.get(t, 0) + mult
    return out


class DTable:
    """Both halves of the change of basis between monomials X^k and
    simples L_m, for all exponent/weight vectors with coordinate sum <= s."""

    def __init__(self, N: int, s: int):
        self.N = N
        self.s = s
        self.keys = alcove(N, s)
        self.mult: dict[Weight, dict[Weight, int]] = {}
        for k in self.keys:
            state = {(0,) * (N - 1): 1}
            for i in range(1, N):
                for _ in range(k[i - 1]):
                    state = _pieri_step(state, N, i)
            self.mult[k] = state
        self._d: dict[Weight, dict[Weight, int]] = {}

    def d_row(self, m: Weight) -> dict[Weight, int]:
        """U_m on the monomial basis: d_row(m)[k] = d^k_m."""
        if m in self._d:
            return self._d[m]
        row = {m: 1}
        for mp, c in self.mult[m].items():
            if mp == m:
                assert c == 1
                continue
            for k, x in self.d_row(mp).items():
                row[k] = row.get(k, 0) - c * x
        row = {k: x for k, x in row.items() if x}
        self._d[m] = row
        return row

    def u_poly(self, m: Weight) -> NPoly:
        return NPoly(self.N, self.d_row(m))

    def check_inverse(self) -> bool:
        """mult . d = identity."""
        for k in self.keys:
            acc: dict[Weight, int] = {}
            for m, c in self.mult[k].items():
                for kk, x in self.d_row(m).items():
                    acc[kk] = acc.get(kk, 0) + c * x
            acc = {kk: x for kk, x in acc.items() if x}
            if acc != {k: 1}:
                return False
        return True


@lru_cache(maxsize=None)
def d_table(N: int, s: int) -> DTable:
    return DTable(N, s)


def mult_table(N: int, s: int) -> DTable:
    return d_table(N, s)


def u_poly(m: Weight, N: int | None = None) -> NPoly:
    N = N or rank_of(m)
    return d_table(N, sum(m)).u_poly(m)


def x_mono(N: int, k: Weight) -> NPoly:
    return NPoly(N, {k: 1})


# ---------------------------------------------------------------------------
# checks

def _u_or_zero(t: DTable, m: tuple[int, ...]) -> NPoly:
    """U_m with the convention that any negative subscript gives zero."""
    if min(m) < 0:
        return NPoly(t.N)
    return t.u_poly(m)


def recursion_check(N: int, s: int) -> list:
    """Violations of X_i U_m = sum_j U_{m + w_j^i} for sum(m) < s."""
    t = d_table(N, s)
    bad = []
    for m in alcove(N, s - 1):
        for i in range(1, N):
            lhs = NPoly.gen(N, i) * t.u_poly(m)
            rhs = NPoly(N)
            for w in fund_weights(N, i):
                rhs = rhs + _u_or_zero(t, tuple(a + b for a, b in zip(m, w)))
            if lhs != rhs:
                bad.append((m, i))
    return bad


def duality_check(N: int, s: int) -> list:
    """Violations of U_m(X_1,..) = U_{m^T}(X_{N-1},..)."""
    t = d_table(N, s)
    bad = []
    for m in alcove(N, s):
        if t.u_poly(m) != t.u_poly(m[::-1]).substitute_reversed():
            bad.append(m)
    return bad


def constant_term_criterion(m: Weight) -> bool:
    """True iff the staircase residues of m are pairwise distinct mod N,
    which is exactly when U_m has a nonzero constant term."""
    N = rank_of(m)
    residues = set()
    for i in range(N):
        # sum(m_i..m_{N-1}) + N - 1 - i, down to the final 0
        r = (sum(m[i:]) + N - 1 - i) % N
        if r in residues:
            return False
        residues.add(r)
    return True


def constant_terms(N: int, e: int) -> dict:
    """Constant terms of all U_m at level sum = e+1, with the residue
    criterion and the color obstruction cross-checked."""
    t = d_table(N, e + 1)
    rows = {}
    all_zero = True
    for m in alcove(N, e + 1):
        if sum(m) != e + 1:
            continue
        c = t.u_poly(m).constant_term()
        crit = constant_term_criterion(m)
        assert (c != 0) == crit
        if central_char(m) != 0:
            assert c == 0
        if c != 0:
            all_zero = False
        rows[m] = c
    assert all_zero == (e % N == 0)
    return {"rank": N, "level": e, "constant_terms": rows,
            "all_zero": all_zero}


def sympower_check(N: int, s: int) -> bool:
    """Symmetric-power recursion
    U^(k+N) - X_1 U^(k+N-1) + ... + (-1)^N U^(k) = 0, where U^(k) is U at
    k*omega_1 and the i-th coefficient is the i-th fundamental character."""
    t = d_table(N, s)

    def sym(k: int) -> NPoly:
        m = (k,) + (0,) * (N - 2)
        return t.u_poly(m)

    for k in range(0, s - N + 1):
        acc = sym(k + N)
        for i in range(1, N):
            acc = acc + ((-1) ** i) * (NPoly.gen(N, i) * sym(k + N - i))
        acc = acc + ((-1) ** N) * sym(k)
        if not acc.is_zero():
            return False
    return True


# ---------------------------------------------------------------------------
# monomial evaluation with caching

def eval_monomials(N: int, exps, values, mul, one):
    """Evaluate all monomials X^k for k in `exps` at `values`
    (values[i] is X_{i+1}), with product caching.  `mul` multiplies two
    ring elements, `one` is the ring unit.  Returns a dict k -> value."""
    cache = {(0,) * (N - 1): one}

    def get(k: Weight):
        if k in cache:
            return cache[k]
        i = next(j for j, a in enumerate(k) if a)
        prev = list(k)
        prev[i] -= 1
        v = mul(values[i], get(tuple(prev)))
        cache[k] = v
        return v

    for k in exps:
        get(k)
    return cache
