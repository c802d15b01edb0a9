"""
The Koornwinder variety of level e: Z-function values at shifted alcove
weights, as exact cyclotomic points carrying the Z/N rotation action,
plus SVG plot data (the N-cusped hypocycloid with point overlays).

The Z-coordinates of the point at k in X+(e) are the elementary symmetric
functions of the N unit-circle numbers eta^{2<k+rho, w>} over the weights
w of the vector representation; equivalently Z_i(k) is the character sum
sum_j eta^{2<k+rho, w_j^i>}.
"""

from __future__ import annotations

import csv
import io
import math
from functools import lru_cache

from .exactnum import CycQ
from .fusion import cyc_order
from .weights import (Weight, alcove, fund_weights, orbit_table, p_number,
                      rho, rotate, stab_census)

__all__ = ["KPoint", "KVariety", "z_values", "variety", "hypocycloid_svg",
           "points_csv", "first_coordinate_overlay"]


def _root_exponent(N: int, n: int, shifted_lam, w: Weight) -> int:
    """Exponent t with eta^{2<k+rho, w>} = zeta_n^t, via lambda coords."""
    # <x, y> = sum_j lx_j ly_j - s(lx) s(ly) / N, and eta^2 = zeta_n^{2N}
    lw = []
    acc = 0
    for c in reversed(w):
        acc += c
        lw.append(acc)
    lw.reverse()
    lw.append(0)
    s1, s2 = sum(shifted_lam), sum(lw)
    return 2 * N * sum(a * b for a, b in zip(shifted_lam, lw)) - 2 * s1 * s2


class KPoint:
    """A Koornwinder point: source weight k and exact Z-coordinates."""

    __slots__ = ("k", "z")

    def __init__(self, k: Weight, z: tuple[CycQ, ...]):
        self.k = k
        self.z = z

    def __repr__(self):
        return f"KPoint(k={self.k}, z=({', '.join(x.text() for x in self.z)}))"


def z_values(N: int, M: int, k: Weight) -> KPoint:
    """The point (Z_1, .., Z_{N-1}) at sigma = 2 pi (k+rho)/M."""
    e = M - N
    n = 2 * N * M
    shifted = tuple(a + b for a, b in zip(k, rho(N)))
    lam = []
    acc = 0
    for c in reversed(shifted):
        acc += c
        lam.append(acc)
    lam.reverse()
    lam.append(0)
    zs = []
    for i in range(1, N):
        vec = [0] * n
        for w in fund_weights(N, i):
            vec[_root_exponent(N, n, lam, w) % n] += 1
        zs.append(CycQ(n, vec))
    return KPoint(k, tuple(zs))


class KVariety:
    """All p_{N,e} points, keyed by source weight, with the orbit table."""

    def __init__(self, N: int, e: int):
        self.N, self.e = N, e
        self.M = e + N
        self.n = cyc_order(N, e)
        self.points = [z_values(N, self.M, k) for k in alcove(N, e)]
        seen = {}
        for pt in self.points:
            if pt.z in seen:
                raise AssertionError(
                    f"coordinate collision between {seen[pt.z]} and {pt.k}")
            seen[pt.z] = pt.k
        self.orbits = orbit_table(N, e)

    def point(self, k: Weight) -> KPoint:
        return self.points[alcove(self.N, self.e).index(k)]

    def census(self) -> dict:
        return stab_census(self.N, self.e)

    def check_rotation(self) -> bool:
        """Z_i(k^->) = zeta^{-i} Z_i(k) with zeta = zeta_N."""
        N, e, n = self.N, self.e, self.n
        by_k = {pt.k: pt for pt in self.points}
        for pt in self.points:
            rot = by_k[rotate(pt.k, e)]
            for i in range(1, N):
                if rot.z[i - 1] != CycQ.root(n, (-i * (n // N)) % n) * pt.z[i - 1]:
                    return False
        return True

    def check_conjugation(self) -> bool:
        """Z_{N-i} = conj(Z_i) at every point, and conjugation permutes
        the point set."""
        zset = {pt.z for pt in self.points}
        for pt in self.points:
            for i in range(1, self.N):
                if pt.z[self.N - 1 - i] != pt.z[i - 1].conjugate():
                    return False
            if tuple(x.conjugate() for x in pt.z) not in zset:
                return False
        return True

    def check_vanishing(self) -> bool:
        """Every U_m with sum(m) = e+1 vanishes exactly at every point."""
        from .chebyshev import d_table, eval_monomials
        N, e = self.N, self.e
        t = d_table(N, e + 1)
        gens = [m for m in alcove(N, e + 1) if sum(m) == e + 1]
        rows = [t.d_row(m) for m in gens]
        exps = {k for row in rows for k in row}
        one = CycQ.from_rational(self.n, 1)
        for pt in self.points:
            cache = eval_monomials(N, exps, pt.z, lambda a, b: a * b, one)
            for row in rows:
                acc = CycQ.zero(self.n)
                for k, c in row.items():
                    acc = acc + c * cache[k]
                if not acc.is_zero():
                    return False
        return True


@lru_cache(maxsize=None)
def variety(N: int, e: int) -> KVariety:
    return KVariety(N, e)


# ---------------------------------------------------------------------------
# plot output

def points_csv(v: KVariety, digits: int = 15) -> str:
    """CSV dump: k-coordinates then re/im of each Z_i."""
    buf = io.StringIO()
    buf.write(f"# cyclotomic-order {v.n}\n")
    w = csv.writer(buf)
    w.writerow([f"k{i+1}" for i in range(v.N - 1)]
               + sum(([f"re_z{i+1}", f"im_z{i+1}"] for i in range(v.N - 1)), []))
    for pt in v.points:
        row = list(pt.k)
        for z in pt.z:
            c = z.embed(digits + 5)
            row += [f"{float(c.real):.{digits}g}", f"{float(c.imag):.{digits}g}"]
        w.writerow(row)
    return buf.getvalue()


def hypocycloid_svg(N: int, overlay=None, path: str | None = None,
                    size: int = 420) -> str:
    """SVG of the N-cusped hypocycloid x+iy with
    x(t) = (N-1) cos t + cos((N-1) t), y(t) = (N-1) sin t - sin((N-1) t),
    framed by the radius-N circle, with optional overlaid points
    ((re, im, multiplicity) triples) drawn with multiplicity-scaled
    markers."""
    half = size / 2
    scale = half / (N + 0.5)

    def xy(re, im):
        return half + re * scale, half - im * scale

    steps = 720
    pts = []
    for j in range(steps + 1):
        t = 2 * math.pi * j / steps
        x = (N - 1) * math.cos(t) + math.cos((N - 1) * t)
        y = (N - 1) * math.sin(t) - math.sin((N - 1) * t)
        pts.append(xy(x, y))
    d = "M" + " L".join(f"{x:.2f},{y:.2f}" for x, y in pts)
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" '
           f'height="{size}" viewBox="0 0 {size} {size}">',
           f'<circle cx="{half}" cy="{half}" r="{N * scale:.2f}" '
           'fill="none" stroke="#999"/>',
           f'<path d="{d}" fill="none" stroke="#c00" stroke-width="2"/>']
    for re, im, mult in (overlay or []):
        x, y = xy(re, im)
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" '
                   f'r="{2.5 * math.sqrt(mult):.2f}" fill="#00c"/>')
    out.append("</svg>")
    svg = "\n".join(out)
    if path:
        with open(path, "w") as fh:
            fh.write(svg)
    return svg


def first_coordinate_overlay(v: KVariety, digits: int = 20):
    """(re, im, multiplicity) triples of the embedded first coordinates."""
    acc: dict[tuple[float, float], int] = {}
    for pt in v.points:
        c = pt.z[0].embed(digits)
        key = (round(float(c.real), 9), round(float(c.imag), 9))
        acc[key] = acc.get(key, 0) + 1
    return [(re, im, m) for (re, im), m in sorted(acc.items())]
