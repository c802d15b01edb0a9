"""
Exact scalar arithmetic: cyclotomic field elements in canonical form,
integer Laurent polynomials (quantum numbers), mixed scalars, and
elementary number theory.

The cyclotomic field Q(zeta_n) is represented on the canonical basis
zeta^0 .. zeta^{phi(n)-1}, reduced modulo the n-th cyclotomic polynomial
Phi_n.  A value is stored as an integer vector over a common positive
denominator, always normalized (gcd of denominator and all entries is 1),
so equality of values is equality of representations.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

import mpmath

__all__ = [
    "CycQ", "LaurentZ", "MixedScalar",
    "cyc_root", "cyc_rational", "cyc_inv", "cyc_embed",
    "cyclotomic_poly", "nt_pack", "factorize",
    "mobius", "euler_phi", "jordan_j3", "divisors",
    "qnum", "qfact", "bareiss_det",
]


# ---------------------------------------------------------------------------
# elementary number theory

def factorize(m: int) -> dict[int, int]:
    """Prime factorization by trial division (inputs are tiny)."""
    assert m >= 1
    out: dict[int, int] = {}
    d = 2
    while d * d <= m:
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d += 1
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def mobius(m: int) -> int:
    f = factorize(m)
    if any(a > 1 for a in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def euler_phi(m: int) -> int:
    out = m
    for p in factorize(m):
        out = out // p * (p - 1)
    return out


def jordan_j3(m: int) -> int:
    """Jordan's totient J_3(m) = m^3 prod_{p|m} (1 - 1/p^3)."""
    out = m ** 3
    for p in factorize(m):
        out = out // p ** 3 * (p ** 3 - 1)
    return out


def divisors(m: int) -> list[int]:
    out = [d for d in range(1, m + 1) if m % d == 0]
    return out


def nt_pack(m: int) -> dict[str, int]:
    """mu, phi and J_3 of m in one record."""
    return {"mu": mobius(m), "phi": euler_phi(m), "j3": jordan_j3(m)}


# ---------------------------------------------------------------------------
# cyclotomic polynomials and reduction tables

def _poly_divmod_exact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (little-endian), remainder 0."""
    num = list(num)
    dd = len(den) - 1
    while den[dd] == 0:
        dd -= 1
    q = [0] * (len(num) - dd)
    for i in range(len(num) - dd - 1, -1, -1):
        c = num[i + dd]
        if c:
            assert c % den[dd] == 0
            q[i] = c // den[dd]
            for j in range(dd + 1):
                num[i + j] -= q[i] * den[j]
    assert all(c == 0 for c in num)
    return q


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, little-endian, by dividing x^n - 1 by the
    proper-divisor cyclotomic polynomials."""
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1
    for d in range(1, n):
        if n % d == 0:
            num = _poly_divmod_exact(num, list(cyclotomic_poly(d)))
    return tuple(num)


@lru_cache(maxsize=None)
def _reduction_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Row k is the coefficient vector of zeta_n^(d+k) on the canonical
    basis, for d = phi(n); enough rows to reduce any product of two
    reduced values plus any exponent below n."""
    phi = cyclotomic_poly(n)
    d = len(phi) - 1
    top = max(n - 1, 2 * d - 2)
    rows: list[tuple[int, ...]] = []
    cur = [-c for c in phi[:d]]  # zeta^d
    rows.append(tuple(cur))
    for _ in range(d, top):
        lead = cur[d - 1]
        cur = [0] + cur[: d - 1]
        if lead:
            for j in range(d):
                cur[j] -= lead * phi[j]
        rows.append(tuple(cur))
    return tuple(rows)


def _reduce_vec(n: int, vec: list[int]) -> list[int]:
    """Reduce an integer coefficient vector (arbitrary length, exponents
    taken modulo n) onto the canonical basis."""
    d = len(cyclotomic_poly(n)) - 1
    if len(vec) > n:
        folded = [0] * n
        for k, c in enumerate(vec):
            if c:
                folded[k % n] += c
        vec = folded
    out = list(vec[:d]) + [0] * (d - min(d, len(vec)))
    table = _reduction_table(n)
    for k in range(d, len(vec)):
        c = vec[k]
        if c:
            row = table[k - d]
            for j in range(d):
                out[j] += c * row[j]
    return out


# ---------------------------------------------------------------------------
# CycQ

class CycQ:
    """An element of Q(zeta_n) in canonical form.

    Stored as an integer vector over a common positive denominator;
    normalized so equality of values is tuple equality.
    """

    __slots__ = ("n", "den", "vec")

    def __init__(self, n: int, vec, den: int = 1, _normalized: bool = False):
        self.n = n
        if _normalized:
            self.den = den
            self.vec = tuple(vec)
            return
        vec = _reduce_vec(n, list(vec))
        if den < 0:
            den, vec = -den, [-c for c in vec]
        g = den
        for c in vec:
            g = gcd(g, c)
            if g == 1:
                break
        if g > 1:
            den //= g
            vec = [c // g for c in vec]
        self.den = den
        self.vec = tuple(vec)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(n: int) -> "CycQ":
        d = len(cyclotomic_poly(n)) - 1
        return CycQ(n, (0,) * d, 1, _normalized=True)

    @staticmethod
    def from_rational(n: int, q) -> "CycQ":
        q = Fraction(q)
        d = len(cyclotomic_poly(n)) - 1
        vec = [q.numerator] + [0] * (d - 1)
        return CycQ(n, vec, q.denominator)

    @staticmethod
    def root(n: int, k: int) -> "CycQ":
        """zeta_n^k in canonical form."""
        k %= n
        vec = [0] * (k + 1)
        vec[k] = 1
        return CycQ(n, vec)

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.vec)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.vec[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational value")
        return Fraction(self.vec[0], self.den)

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "CycQ"):
        if self.n != other.n:
            raise ValueError(f"cyclotomic order mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycQ.from_rational(self.n, other)
        self._check(other)
        a, b = self, other
        vec = [b.den * x + a.den * y for x, y in zip(a.vec, b.vec)]
        return CycQ(self.n, vec, a.den * b.den)

    __radd__ = __add__

    def __neg__(self):
        return CycQ(self.n, tuple(-c for c in self.vec), self.den,
                    _normalized=True)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycQ.from_rational(self.n, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return CycQ(self.n, [other.numerator * c for c in self.vec],
                        self.den * other.denominator)
        self._check(other)
        a, b = self.vec, other.vec
        d = len(a)
        out = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] += x * y
        return CycQ(self.n, out, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "CycQ":
        """Field inverse via the extended euclidean algorithm with Phi_n."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic value")
        phi = [Fraction(c) for c in cyclotomic_poly(self.n)]
        a = [Fraction(c, self.den) for c in self.vec]
        # extended gcd of a and phi over Q[x]
        r0, r1 = a, phi
        s0, s1 = [Fraction(1)], [Fraction(0)]

        def deg(p):
            for i in range(len(p) - 1, -1, -1):
                if p[i]:
                    return i
            return -1

        def sub_scaled(p, q, c, shift):
            out = list(p) + [Fraction(0)] * max(0, len(q) + shift - len(p))
            for i, x in enumerate(q):
                out[i + shift] -= c * x
            return out

        while deg(r1) >= 0:
            while deg(r0) >= deg(r1) >= 0:
                d0, d1 = deg(r0), deg(r1)
                c = r0[d0] / r1[d1]
                r0 = sub_scaled(r0, r1, c, d0 - d1)
                s0 = sub_scaled(s0, s1, c, d0 - d1)
                if deg(r0) < 0:
                    break
            r0, r1 = r1, r0
            s0, s1 = s1, s0
        # r0 is a nonzero constant: gcd(a, phi) up to scalar
        c = r0[deg(r0)]
        inv = [x / c for x in s0]
        den = 1
        for x in inv:
            den = den * x.denominator // gcd(den, x.denominator)
        vec = [int(x * den) for x in inv]
        out = CycQ(self.n, vec, den)
        assert (out * self - 1).is_zero()
        return out

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * Fraction(1, 1) / CycQ.from_rational(self.n, other)
        self._check(other)
        return self * other.inverse()

    def conjugate(self) -> "CycQ":
        """Complex conjugation zeta^k -> zeta^{n-k}."""
        vec = [0] * self.n
        vec[0] = self.vec[0]
        for k in range(1, len(self.vec)):
            if self.vec[k]:
                vec[self.n - k] += self.vec[k]
        return CycQ(self.n, vec, self.den)

    def galois(self, t: int) -> "CycQ":
        """Galois action zeta -> zeta^t (t coprime to n)."""
        if gcd(t, self.n) != 1:
            raise ValueError("galois exponent must be coprime to the order")
        vec = [0] * self.n
        for k, c in enumerate(self.vec):
            if c:
                vec[(k * t) % self.n] += c
        return CycQ(self.n, vec, self.den)

    # -- misc --------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycQ.from_rational(self.n, other)
        if not isinstance(other, CycQ):
            return NotImplemented
        return (self.n, self.den, self.vec) == (other.n, other.den, other.vec)

    def __hash__(self):
        return hash((self.n, self.den, self.vec))

    def embed(self, precision: int = 30):
        """Numeric value as an mpmath complex at the given working
        precision (zeta_n -> exp(2 pi i / n))."""
        with mpmath.workdps(precision + 10):
            z = mpmath.mpc(0)
            for k, c in enumerate(self.vec):
                if c:
                    z += c * mpmath.expjpi(mpmath.mpf(2 * k) / self.n)
            return z / self.den

    def __repr__(self):
        return f"CycQ({self.n}, {self.text()})"

    def text(self) -> str:
        """Render as `c0 + c1*z + c2*z^2 + ...` with rational c's."""
        parts = []
        for k, c in enumerate(self.vec):
            if not c:
                continue
            coeff = str(Fraction(c, self.den))
            if k == 0:
                parts.append(coeff)
            elif k == 1:
                parts.append(f"{coeff}*z")
            else:
                parts.append(f"{coeff}*z^{k}")
        return " + ".join(parts) if parts else "0"


def cyc_root(n: int, k: int) -> CycQ:
    return CycQ.root(n, k)


def cyc_rational(n: int, q) -> CycQ:
    return CycQ.from_rational(n, q)


def cyc_inv(x: CycQ) -> CycQ:
    return x.inverse()


def cyc_embed(x: CycQ, precision: int = 30):
    return x.embed(precision)


# ---------------------------------------------------------------------------
# integer Laurent polynomials in one variable v

class LaurentZ:
    """Integer Laurent polynomial in v, stored sparsely."""

    __slots__ = ("c",)

    def __init__(self, c: dict[int, int] | int = 0):
        if isinstance(c, int):
            c = {0: c} if c else {}
        self.c = {e: x for e, x in c.items() if x}

    @staticmethod
    def v(exp: int = 1, coeff: int = 1) -> "LaurentZ":
        return LaurentZ({exp: coeff})

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentZ(other)
        out = dict(self.c)
        for e, x in other.c.items():
            out[e] = out.get(e, 0) + x
        return LaurentZ(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentZ({e: -x for e, x in self.c.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentZ(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = LaurentZ(other)
        out: dict[int, int] = {}
        for e1, x1 in self.c.items():
            for e2, x2 in other.c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + x1 * x2
        return LaurentZ(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentZ(other)
        if not isinstance(other, LaurentZ):
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def is_zero(self) -> bool:
        return not self.c

    def nonneg(self) -> bool:
        return all(x >= 0 for x in self.c.values())

    def divide_exact(self, other: "LaurentZ") -> "LaurentZ":
        """Exact division; raises if the division leaves a remainder."""
        if other.is_zero():
            raise ZeroDivisionError
        num = dict(self.c)
        dtop = max(other.c)
        lead = other.c[dtop]
        out: dict[int, int] = {}
        while num:
            ntop = max(num)
            c = num[ntop]
            if c % lead:
                raise ValueError("inexact Laurent division")
            q = c // lead
            out[ntop - dtop] = q
            for e, x in other.c.items():
                k = ntop - dtop + e
                num[k] = num.get(k, 0) - q * x
                if num[k] == 0:
                    del num[k]
        return LaurentZ(out)

    def valuation(self) -> int | None:
        """Lowest v-exponent, or None for the zero polynomial."""
        return min(self.c) if self.c else None

    def eval_at_one(self) -> int:
        return sum(self.c.values())

    def __repr__(self):
        if not self.c:
            return "0"
        parts = []
        for e in sorted(self.c):
            x = self.c[e]
            if e == 0:
                parts.append(str(x))
            else:
                head = "" if x == 1 else ("-" if x == -1 else str(x) + "*")
                parts.append(f"{head}v^{e}" if e != 1 else f"{head}v")
        return " + ".join(parts).replace("+ -", "- ")


def qnum(k: int) -> LaurentZ:
    """Quantum number [k] = (v^k - v^-k)/(v - v^-1) = v^{k-1}+v^{k-3}+..."""
    assert k >= 0
    return LaurentZ({k - 1 - 2 * j: 1 for j in range(k)})


def qfact(k: int) -> LaurentZ:
    out = LaurentZ(1)
    for j in range(1, k + 1):
        out = out * qnum(j)
    return out


# ---------------------------------------------------------------------------
# mixed scalars: Laurent polynomials with cyclotomic coefficients

class MixedScalar:
    """Element of Q(zeta_n)[v, v^-1], stored sparsely by v-exponent."""

    __slots__ = ("n", "c")

    def __init__(self, n: int, c: dict[int, CycQ] | None = None):
        self.n = n
        self.c = {e: x for e, x in (c or {}).items() if not x.is_zero()}

    @staticmethod
    def from_laurent(n: int, p: LaurentZ) -> "MixedScalar":
        return MixedScalar(n, {e: CycQ.from_rational(n, x)
                               for e, x in p.c.items()})

    @staticmethod
    def from_cyc(x: CycQ) -> "MixedScalar":
        return MixedScalar(x.n, {0: x})

    def __add__(self, other):
        out = dict(self.c)
        for e, x in other.c.items():
            out[e] = out[e] + x if e in out else x
        return MixedScalar(self.n, out)

    def __neg__(self):
        return MixedScalar(self.n, {e: -x for e, x in self.c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, LaurentZ):
            other = MixedScalar.from_laurent(self.n, other)
        if isinstance(other, CycQ):
            other = MixedScalar.from_cyc(other)
        out: dict[int, CycQ] = {}
        for e1, x1 in self.c.items():
            for e2, x2 in other.c.items():
                p = x1 * x2
                k = e1 + e2
                out[k] = out[k] + p if k in out else p
        return MixedScalar(self.n, out)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.c

    def __eq__(self, other):
        if not isinstance(other, MixedScalar):
            return NotImplemented
        return self.n == other.n and self.c == other.c

    def __repr__(self):
        if not self.c:
            return "0"
        return " + ".join(f"({x.text()})*v^{e}" for e, x in sorted(self.c.items()))


# ---------------------------------------------------------------------------
# exact determinants

def bareiss_det(rows: list[list[CycQ]]) -> CycQ:
    """Fraction-free (Bareiss) determinant over a field of CycQ values.

    Divisions by the previous pivot are exact; the pivot inverse is
    computed once per elimination step.
    """
    m = [list(r) for r in rows]
    size = len(m)
    if size == 0:
        raise ValueError("empty matrix")
    n = m[0][0].n
    one = CycQ.from_rational(n, 1)
    sign = 1
    prev = one
    for k in range(size - 1):
        if m[k][k].is_zero():
            for r in range(k + 1, size):
                if not m[r][k].is_zero():
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return CycQ.zero(n)
        prev_inv = prev.inverse()
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) * prev_inv
            m[i][k] = CycQ.zero(n)
        prev = m[k][k]
    det = m[size - 1][size - 1]
    return det if sign == 1 else -det
