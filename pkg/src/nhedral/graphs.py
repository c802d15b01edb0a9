"""
N-colored graphs as integral representations: generation of the type A
(alcove fusion) and type D (orbit/split quotient) graphs, a verifier
checking pairwise commutation of the step matrices and exact vanishing
of the level-(e+1) Chebyshev polynomials, and exact joint-spectrum
reports against the Koornwinder variety.

The joint spectrum is computed exactly: traces of U_m at the commuting
step-matrix tuple are integers, and the S-matrix orthogonality relations
convert them into the multiplicity of each variety point.
"""

from __future__ import annotations

import os
from functools import lru_cache
from itertools import permutations
from math import gcd

import numpy as np

from .chebyshev import d_table, eval_monomials
from .exactnum import CycQ
from .fusion import fuse_fund, sln_modular
from .weights import Weight, alcove, central_char, rotate

__all__ = [
    "NGraph", "gen_type_a", "gen_type_d", "verify", "joint_spectrum",
    "load_graph", "save_graph", "parse_graph", "format_graph",
    "bundled_graph", "BUNDLED",
]

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")


class NGraph:
    """An N-colored multigraph.  Vertices are 0..V-1 with colors in
    {0..N-1}; `edges` maps sorted index pairs to multiplicities.  The
    step matrix A(Gamma_i) keeps the edges whose color difference is i."""

    def __init__(self, N: int, colors, edges, level: int | None = None,
                 labels=None):
        self.N = N
        self.colors = tuple(colors)
        self.edges = {}
        for (a, b), m in edges.items():
            if m < 0:
                raise ValueError(f"negative multiplicity on ({a}, {b})")
            if m:
                self.edges[(min(a, b), max(a, b))] = m
        self.level = level
        self.labels = tuple(labels) if labels is not None else None

    @property
    def size(self) -> int:
        return len(self.colors)

    def color_ok(self) -> bool:
        return all(self.colors[a] != self.colors[b] for a, b in self.edges)

    def step_matrix(self, i: int) -> np.ndarray:
        """A(Gamma_i): the block Z_c^(c+i) of the adjacency matrix."""
        V = self.size
        out = np.zeros((V, V), dtype=np.int64)
        for (a, b), m in self.edges.items():
            if (self.colors[b] - self.colors[a]) % self.N == i % self.N:
                out[a, b] = m
            if (self.colors[a] - self.colors[b]) % self.N == i % self.N:
                out[b, a] = m
        return out

    def adjacency(self) -> np.ndarray:
        V = self.size
        out = np.zeros((V, V), dtype=np.int64)
        for (a, b), m in self.edges.items():
            out[a, b] = out[b, a] = m
        return out

    def __eq__(self, other):
        if not isinstance(other, NGraph):
            return NotImplemented
        return (self.N, self.colors, self.edges) == \
            (other.N, other.colors, other.edges)


# ---------------------------------------------------------------------------
# generation

def gen_type_a(N: int, e: int) -> NGraph:
    """The type A graph: vertices the level-e alcove colored by the
    central character, adjacency the fusion multiplicities of the
    fundamental objects."""
    alc = alcove(N, e)
    index = {m: x for x, m in enumerate(alc)}
    colors = [central_char(m) % N for m in alc]
    edges = {}
    for x, m in enumerate(alc):
        for i in range(1, N):
            for k, mult in fuse_fund(N, e, i, m).items():
                y = index[k]
                if (colors[y] - colors[x]) % N != i:
                    raise AssertionError("fusion breaks the coloring")
                pair = (min(x, y), max(x, y))
                prev = edges.get(pair)
                if prev is None:
                    edges[pair] = mult
                elif prev != mult:
                    raise AssertionError("asymmetric fusion multiplicity")
    return NGraph(N, colors, edges, level=e, labels=[str(m) for m in alc])


def _margin_matrices(rows: int, cols: int, rs: int, cs: int):
    """All nonnegative integer matrices with every row sum rs and every
    column sum cs (requires rows*rs == cols*cs)."""
    out = []
    mat = [[0] * cols for _ in range(rows)]
    col_left = [cs] * cols

    def rec(r):
        if r == rows:
            out.append(tuple(tuple(row) for row in mat))
            return
        def fill(c, left):
            if c == cols:
                if left == 0:
                    rec(r + 1)
                return
            hi = min(left, col_left[c])
            for v in range(hi + 1):
                mat[r][c] = v
                col_left[c] -= v
                fill(c + 1, left - v)
                col_left[c] += v
            mat[r][c] = 0
        fill(0, rs)

    rec(0)
    return out


def gen_type_d(N: int, e: int, report: dict | None = None) -> NGraph:
    """The type D graph: vertices are the orbits of the alcove under the
    rotation power p = N/gcd(N,e), with each orbit stabilized by a
    subgroup of order s split into s copies.  Multiplicities incident to
    at most one split family are forced by ambient fusion; the blocks
    between two split families are solved from the margin constraints
    plus the verifier conditions, and the solution is certified unique
    up to relabeling of split copies."""
    g = gcd(N, e)
    if g == 1:
        raise ValueError("type D requires gcd(N, e) > 1 "
                         "(otherwise it is type A relabeled)")
    p = N // g
    alc = alcove(N, e)

    def act_orbit(m):
        out = [m]
        cur = m
        for _ in range(g - 1):
            for _ in range(p):
                cur = rotate(cur, e)
            if cur == out[0]:
                break
            out.append(cur)
        return out

    seen = set()
    families = []  # (rep, members, stab)
    for m in alc:
        if m in seen:
            continue
        orb = act_orbit(m)
        seen.update(orb)
        families.append((m, tuple(orb), g // len(orb)))

    vertices = []  # (family index, copy index)
    labels = []
    for fi, (rep, orb, s) in enumerate(families):
        assert len({central_char(m) % N for m in orb}) == 1, \
            "central character must be orbit-constant"
        for u in range(s):
            vertices.append((fi, u))
            labels.append(f"{rep}" + (f"#{u}" if s > 1 else ""))
    colors = [central_char(families[fi][0]) % N for fi, _ in vertices]
    vindex = {v: x for x, v in enumerate(vertices)}

    def fus(m, i):
        return fuse_fund(N, e, i, m)

    # forced part: every edge with at most one split endpoint
    edges = {}

    def add_edge(x, y, m):
        if m:
            pair = (min(x, y), max(x, y))
            prev = edges.setdefault(pair, m)
            assert prev == m, "inconsistent forced multiplicity"

    for fx, (mx, ox, sx) in enumerate(families):
        for fy, (my, oy, sy) in enumerate(families):
            d = (colors[vindex[(fy, 0)]] - colors[vindex[(fx, 0)]]) % N
            if d == 0 or fy < fx:
                continue
            if sx > 1 and sy > 1:
                continue
            if sx == 1 and sy == 1:
                mult = sum(fus(mx, d).get(k, 0) for k in oy)
                add_edge(vindex[(fx, 0)], vindex[(fy, 0)], mult)
            elif sy > 1:
                # one value per copy: Hom(w_i x L_mx, Res X_u)
                mult = sum(fus(mx, d).get(k, 0) for k in oy)
                for u in range(sy):
                    add_edge(vindex[(fx, 0)], vindex[(fy, u)], mult)
            else:
                mult = sum(fus(k, d).get(my, 0) for k in ox)
                for u in range(sx):
                    add_edge(vindex[(fx, u)], vindex[(fy, 0)], mult)

    # unknown blocks between pairs of split families
    unknowns = []  # (fx, fy, candidate matrices)
    for fx, (mx, ox, sx) in enumerate(families):
        if sx == 1:
            continue
        for fy, (my, oy, sy) in enumerate(families[fx + 1:], start=fx + 1):
            if sy == 1:
                continue
            d = (colors[vindex[(fy, 0)]] - colors[vindex[(fx, 0)]]) % N
            if d == 0:
                continue
            rs = sum(fus(k, d).get(my, 0) for k in ox)
            cs = sum(fus(mx, d).get(k, 0) for k in oy)
            assert sx * rs == sy * cs, "margin mismatch"
            unknowns.append((fx, fy, _margin_matrices(sx, sy, rs, cs)))

    def build(choice):
        full = dict(edges)
        for (fx, fy, _), mat in zip(unknowns, choice):
            for u, row in enumerate(mat):
                for v, mult in enumerate(row):
                    if mult:
                        full[(min(vindex[(fx, u)], vindex[(fy, v)]),
                              max(vindex[(fx, u)], vindex[(fy, v)]))] = mult
        return NGraph(N, colors, full, level=e, labels=labels)

    solutions = []
    stack = [()]
    while stack:
        partial = stack.pop()
        if len(partial) < len(unknowns):
            for mat in unknowns[len(partial)][2]:
                stack.append(partial + (mat,))
            continue
        cand = build(partial)
        rep = verify(cand, e, spectrum=False)
        if rep["commutation_ok"] and rep["vanishing_ok"]:
            solutions.append(partial)
    if not solutions:
        raise ValueError(f"no type D graph solves the constraints "
                         f"at ({N}, {e})")

    # canonicalize up to relabeling of split copies within each family
    split_fams = sorted({f for t in ((u[0], u[1]) for u in unknowns)
                         for f in t})
    sizes = {f: families[f][2] for f in split_fams}

    def canon(choice):
        best = None
        perms = [list(permutations(range(sizes[f]))) for f in split_fams]
        def rec(idx, assign):
            nonlocal best
            if idx == len(split_fams):
                key = []
                for (fx, fy, _), mat in zip(unknowns, choice):
                    px = assign[fx]
                    py = assign[fy]
                    key.append(tuple(tuple(mat[px[u]][py[v]]
                                           for v in range(len(mat[0])))
                                     for u in range(len(mat))))
                key = tuple(key)
                if best is None or key < best:
                    best = key
                return
            for pm in perms[idx]:
                assign[split_fams[idx]] = pm
                rec(idx + 1, assign)
        rec(0, {})
        return best

    classes = {canon(c) for c in solutions}
    if report is not None:
        report["solutions"] = len(solutions)
        report["classes"] = len(classes)
    assert len(classes) == 1, \
        f"type D solution not unique up to relabeling at ({N}, {e})"
    return build(solutions[0])


# ---------------------------------------------------------------------------
# verification

def _monomial_cache(g: NGraph, exps):
    N = g.N
    mats = [g.step_matrix(i) for i in range(1, N)]
    cache = eval_monomials(N, exps, mats, lambda a, b: a @ b,
                           np.eye(g.size, dtype=np.int64))
    for v in cache.values():
        assert np.abs(v).max() < 2**50, "integer overflow guard"
    return cache


def verify(g: NGraph, e: int, spectrum: bool = True) -> dict:
    """Exact verification: coloring, pairwise commutation of the step
    matrices, vanishing of all U_m with sum(m) = e+1, and (optionally)
    the joint spectrum against the Koornwinder variety."""
    N = g.N
    report = {"color_ok": g.color_ok(), "commutation_ok": False,
              "vanishing_ok": False, "spectrum": None, "ok": False}
    if not report["color_ok"]:
        return report
    mats = [g.step_matrix(i) for i in range(1, N)]
    report["commutation_ok"] = all(
        np.array_equal(a @ b, b @ a)
        for x, a in enumerate(mats) for b in mats[x + 1:])
    if not report["commutation_ok"]:
        return report
    dt = d_table(N, e + 1)
    tops = [m for m in alcove(N, e + 1) if sum(m) == e + 1]
    exps = sorted({k for m in tops for k in dt.u_poly(m).c})
    cache = _monomial_cache(g, exps)
    ok = True
    for m in tops:
        val = sum((c * cache[k] for k, c in dt.u_poly(m).c.items()),
                  np.zeros((g.size, g.size), dtype=np.int64))
        if np.any(val):
            ok = False
            break
    report["vanishing_ok"] = ok
    if ok and spectrum:
        report["spectrum"] = joint_spectrum(g, e)
        report["spectrum_ok"] = report["spectrum"] is not None
    report["ok"] = bool(report["vanishing_ok"]
                        and (not spectrum or report.get("spectrum_ok")))
    return report


def joint_spectrum(g: NGraph, e: int) -> dict | None:
    """Multiplicity of each Koornwinder point in the joint spectrum of
    the step matrices, computed exactly: mu(k) = S_k0/D sum_m tr U_m(A)
    conj(S_km), by S-matrix orthogonality.  Returns None if any
    multiplicity fails to be a nonnegative integer (spectrum not
    supported on the variety)."""
    N = g.N
    md = sln_modular(N, e)
    alc = alcove(N, e)
    dt = d_table(N, e)
    exps = sorted({k for m in alc for k in dt.u_poly(m).c})
    cache = _monomial_cache(g, exps)
    traces = {}
    for m in alc:
        traces[m] = int(sum(c * int(np.trace(cache[k]))
                            for k, c in dt.u_poly(m).c.items()))
    n = md.n
    dim = md.globaldim
    out = {}
    total = 0
    for k in alc:
        acc = CycQ.zero(n)
        for m in alc:
            acc = acc + md.s_entry(k, m).conjugate() * traces[m]
        val = (md.s_entry(k, (0,) * (N - 1)) * acc) * dim.inverse()
        if not val.is_rational():
            return None
        q = val.as_rational()
        if q.denominator != 1 or q < 0:
            return None
        if q:
            out[k] = int(q)
            total += int(q)
    if total != g.size:
        return None
    return out


# ---------------------------------------------------------------------------
# file format

def format_graph(g: NGraph) -> str:
    lines = ["nhedral-graph 1", f"rank {g.N}"]
    if g.level is not None:
        lines.append(f"level {g.level}")
    lines.append(f"vertices {g.size}")
    for x, c in enumerate(g.colors):
        suffix = f"  # {g.labels[x]}" if g.labels else ""
        lines.append(f"v {x} {c}{suffix}")
    for (a, b), m in sorted(g.edges.items()):
        lines.append(f"e {a} {b} {m}")
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> NGraph:
    N = level = nv = None
    colors = {}
    edges = {}
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if ln == 1 or parts[0] == "nhedral-graph":
                if parts != ["nhedral-graph", "1"]:
                    raise ValueError("bad header")
            elif parts[0] == "rank":
                N = int(parts[1])
            elif parts[0] == "level":
                level = int(parts[1])
            elif parts[0] == "vertices":
                nv = int(parts[1])
            elif parts[0] == "v":
                colors[int(parts[1])] = int(parts[2])
            elif parts[0] == "e":
                a, b, m = int(parts[1]), int(parts[2]), int(parts[3])
                if m < 1 or not a < b:
                    raise ValueError("bad edge")
                edges[(a, b)] = m
            else:
                raise ValueError(f"unknown directive {parts[0]!r}")
        except (IndexError, ValueError) as exc:
            raise ValueError(f"line {ln}: {exc}") from None
    if N is None or nv is None:
        raise ValueError("missing rank or vertices")
    if sorted(colors) != list(range(nv)):
        raise ValueError("vertex indices must cover 0..V-1")
    col = [colors[x] for x in range(nv)]
    for (a, b) in edges:
        if b >= nv:
            raise ValueError(f"edge endpoint {b} out of range")
        if col[a] == col[b]:
            raise ValueError(f"color clash on edge ({a}, {b})")
    return NGraph(N, col, edges, level=level)


def save_graph(g: NGraph, path: str):
    with open(path, "w") as fh:
        fh.write(format_graph(g))


def load_graph(path: str) -> NGraph:
    with open(path) as fh:
        return parse_graph(fh.read())


BUNDLED = ("E4", "2A_c_4", "2A_c_4_half", "D_4_4")


def bundled_graph(name: str) -> NGraph:
    """One of the shipped transcribed graphs."""
    if name not in BUNDLED:
        raise ValueError(f"unknown bundled graph {name!r}; "
                         f"choose from {BUNDLED}")
    return load_graph(os.path.join(DATA_DIR, name + ".graph"))
