"""
Command-line entry point: one subcommand group per module, deterministic
text outputs (JSON for reports, CSV for matrices, SVG for plots), and a
provenance header on every emitted file.

Exit codes: 0 success / PASS, 1 verification FAIL, 2 usage errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import __version__
from .center import (center_modular, center_rank, center_simples,
                     cm_numerology)
from .chebyshev import d_table
from .exactnum import LaurentZ
from .fourier import (compare, epsilon, frobenius_exponent_reduced,
                      prefourier, symbol_orbits, symbols)
from .fusion import cyc_order, fusion_matrix, sln_modular
from .graphs import (BUNDLED, bundled_graph, format_graph, gen_type_a,
                     gen_type_d, joint_spectrum, load_graph, verify)
from .hecke import dim_nhecke, hecke, one_dim_reps, rep_census
from .koornwinder import (first_coordinate_overlay, hypocycloid_svg,
                          points_csv, variety)
from .weights import alcove, stab_census

GUARD_N, GUARD_M = 6, 14


def _provenance(args, n: int | None) -> list[str]:
    bits = [f"tool nhedral {__version__}"]
    if getattr(args, "rank", None) is not None:
        bits.append(f"N={args.rank}")
    if getattr(args, "level", None) is not None:
        bits.append(f"e={args.level}")
    if getattr(args, "order", None) is not None:
        bits.append(f"M={args.order}")
    if n is not None:
        bits.append(f"n={n}")
    bits.append("argv: " + " ".join(sys.argv[1:]))
    return bits


def _emit(text: str, args, n=None, comment="#"):
    if getattr(args, "out", None):
        head = "".join(f"{comment} {b}\n" for b in _provenance(args, n)) \
            if comment else ""
        with open(args.out, "w") as fh:
            fh.write(head + text)
    else:
        sys.stdout.write(text)


def _emit_json(obj, args, n=None):
    obj = {"provenance": _provenance(args, n), **obj}
    _emit(json.dumps(obj, indent=2, default=str) + "\n", args, n=None,
          comment="")


def _guarded(args) -> bool:
    N = getattr(args, "rank", None)
    e = getattr(args, "level", None)
    M = getattr(args, "order", None)
    if M is None and N is not None and e is not None:
        M = N + e
    if ((N is not None and N > GUARD_N)
            or (M is not None and M > GUARD_M)) and not args.force:
        print(f"refusing N > {GUARD_N} or M > {GUARD_M} without --force",
              file=sys.stderr)
        return True
    return False


def _cyc_text(x, digits):
    if x is None:
        return "?"
    if digits:
        v = x.embed(digits)
        return f"{float(v.real):.{min(digits, 17)}g}"\
               f"{float(v.imag):+.{min(digits, 17)}g}j"
    return x.text()


# ---------------------------------------------------------------------------
# Laurent / element expression parsing for `nhedral mult`

_TERM = re.compile(r"^\s*([+-]?\d*)\s*(v(?:\^(-?\d+))?)?\s*$")


def parse_laurent(s: str) -> LaurentZ:
    """Parse e.g. 'v^-2+1', '2v^3-v', '-3'."""
    s = s.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    parts = re.split(r"(?<![\^+-])([+-])", "+" + s)
    out = LaurentZ(0)
    for sign, term in zip(parts[1::2], parts[2::2]):
        m = _TERM.match(term)
        if not m or (not m.group(1) and not m.group(2)):
            raise ValueError(f"bad Laurent term {term!r} in {s!r}")
        coeff = int(m.group(1)) if m.group(1) not in ("", "+", "-") else 1
        if sign == "-":
            coeff = -coeff
        if m.group(2):
            exp = int(m.group(3)) if m.group(3) else 1
            out = out + LaurentZ.v(exp, coeff)
        else:
            out = out + LaurentZ(coeff)
    return out


def _split_terms(s: str) -> list[str]:
    """Split on ';' outside square brackets (C[i;...] keeps its own)."""
    out, depth, cur = [], 0, []
    for ch in s:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == ";" and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    return out


def parse_element(s: str, H) -> dict:
    """Parse a semicolon list of `coeff*C[i;m1,...]` / `coeff*1` terms."""
    out: dict = {}
    for raw in _split_terms(s):
        term = raw.strip()
        if not term:
            continue
        if "*" in term:
            cs, _, basis = term.rpartition("*")
            coeff = parse_laurent(cs)
        else:
            basis, coeff = term, LaurentZ(1)
        basis = basis.strip()
        if basis == "1":
            key = "1"
        else:
            m = re.match(r"^C\[(\d+)\s*[;:]\s*([\d,\s-]+)\]$", basis)
            if not m:
                raise ValueError(f"bad basis term {basis!r}")
            i = int(m.group(1))
            wt = tuple(int(x) for x in m.group(2).split(","))
            if len(wt) != H.N - 1 or wt not in H.alc:
                raise ValueError(f"weight {wt} not in the level-{H.e} "
                                 f"alcove of rank {H.N}")
            key = (i % H.N, wt)
        out[key] = out.get(key, LaurentZ(0)) + coeff
    return {k: v for k, v in out.items() if not v.is_zero()}


def element_text(elt: dict) -> str:
    if not elt:
        return "0"
    bits = []
    for key in sorted(elt, key=lambda k: (k != "1", k)):
        base = "1" if key == "1" else \
            f"C[{key[0]};{','.join(map(str, key[1]))}]"
        bits.append(f"({elt[key]})*{base}")
    return " ; ".join(bits)


# ---------------------------------------------------------------------------
# subcommand handlers

def _cmd_weights(args) -> int:
    _emit_json(stab_census(args.rank, args.level), args,
               cyc_order(args.rank, args.level))
    return 0


def _cmd_chebyshev(args) -> int:
    N, s = args.rank, args.max_sum
    dt = d_table(N, s)
    rows = {}
    for m in alcove(N, s):
        rows[str(m)] = {str(k): c for k, c in sorted(dt.u_poly(m).c.items())}
    if args.json:
        _emit_json({"rank": N, "max_sum": s, "polynomials": rows}, args)
    else:
        lines = []
        for m, poly in rows.items():
            terms = " + ".join(f"{c}*X^{k}" for k, c in poly.items())
            lines.append(f"U_{m} = {terms}")
        _emit("\n".join(lines) + "\n", args)
    return 0


def _cmd_fusion(args) -> int:
    N, e = args.rank, args.level
    n = cyc_order(N, e)
    alc = alcove(N, e)
    if args.what == "table":
        lines = []
        for i in range(1, N):
            lines.append(f"# fusion matrix of fundamental {i}")
            for row in fusion_matrix(N, e, i):
                lines.append(",".join(map(str, row)))
        _emit("\n".join(lines) + "\n", args, n)
        return 0
    md = sln_modular(N, e)
    if args.what == "smatrix":
        lines = [",".join(_cyc_text(md.s_entry(m, k), args.numeric)
                          for k in alc) for m in alc]
    else:
        lines = [",".join(_cyc_text(md.t_entry(m), args.numeric)
                          if m == k else "0" for k in alc) for m in alc]
    _emit("\n".join(lines) + "\n", args, n)
    return 0


def _cmd_koornwinder(args) -> int:
    N, e = args.rank, args.level
    v = variety(N, e)
    if args.what == "points":
        _emit(points_csv(v, digits=args.numeric or 15), args, v.n)
    elif args.what == "census":
        _emit_json(v.census(), args, v.n)
    else:
        svg = hypocycloid_svg(N, overlay=first_coordinate_overlay(v))
        head = "<!-- " + " | ".join(_provenance(args, v.n)) + " -->\n"
        _emit(head + svg + "\n", args, None, comment="")
    return 0


def _cmd_center(args) -> int:
    N, e = args.rank, args.level
    M = N + e
    n = cyc_order(N, e)
    if args.what == "rank":
        rk = center_rank(N, M)
        if not rk["agree"]:
            print("rank formula and enumeration disagree", file=sys.stderr)
            return 1
        _emit(str(rk["formula"]) + "\n", args, n)
        return 0
    if args.what == "simples":
        data = [{"m": str(a.m), "k": str(a.k), "i": a.i, "s": a.s}
                for a in center_simples(N, e)]
        _emit_json({"rank": len(data), "simples": data}, args, n)
        return 0
    if args.what == "cm":
        _emit_json(cm_numerology(N, M), args, n)
        return 0
    cd = center_modular(N, e)
    if args.what == "smatrix":
        scale = cd.md.globaldim.inverse() if args.unitary else None
        lines = []
        for row in cd.S:
            vals = [x if x is None or scale is None else x * scale
                    for x in row]
            lines.append(",".join(_cyc_text(x, args.numeric) for x in vals))
    else:
        lines = [",".join(_cyc_text(t, args.numeric) if i == j else "0"
                          for j in range(len(cd.T)))
                 for i, t in enumerate(cd.T)]
    _emit("\n".join(lines) + "\n", args, n)
    return 0


def _cmd_fourier(args) -> int:
    N, M = args.rank, args.order
    e = M - N
    if e <= 0:
        print("order M must exceed rank N", file=sys.stderr)
        return 2
    n = cyc_order(N, e)

    def r_of(f):
        if args.r_convention == "e":
            num = sum(f.top) - sum(f.fbar)
            if num % e:
                raise ValueError(
                    f"r not integral under the e-convention for {f}")
            return num // e
        return f.r()

    if args.what == "symbols":
        data = []
        try:
            for f in symbols(N, M):
                data.append({"top": f.top, "bottom": f.bottom,
                             "r": r_of(f), "epsilon": epsilon(f)})
        except ValueError as exc:
            _emit_json({"error": str(exc),
                        "convention_used": args.r_convention}, args, n)
            return 1
        _emit_json({"count": len(data),
                    "convention_used": args.r_convention,
                    "symbols": data}, args, n)
        return 0
    if args.what == "frobenius":
        data = [{"orbit": str(f), "alpha_mod_2M": frobenius_exponent_reduced(f)}
                for f, _ in symbol_orbits(N, M)]
        _emit_json({"orbits": data}, args, n)
        return 0
    if args.what == "matrix":
        orbits, mat = prefourier(N, M)
        lines = [",".join(_cyc_text(x, args.numeric) for x in row)
                 for row in mat]
        _emit("\n".join(lines) + "\n", args, n)
        return 0
    rep = compare(N, M)
    failures = [k for k, ok in rep.items() if k != "ok" and not ok]
    _emit_json({"pairs_checked": [[N, M]], "failures": failures,
                "convention_used": args.r_convention, "pass": rep["ok"]},
               args, n)
    return 0 if rep["ok"] else 1


def _cmd_nhedral(args) -> int:
    N, e = args.rank, args.level
    n = cyc_order(N, e)
    if args.what == "dim":
        _emit(str(dim_nhecke(N, e)) + "\n", args, n)
        return 0
    if args.what == "onedim":
        rep = one_dim_reps(N, e)
        _emit_json({"count": rep["count"],
                    "reps": [r[0] for r in rep["reps"]]}, args, n)
        return 0
    if args.what == "rep":
        _emit_json(rep_census(N, e), args, n)
        return 0
    if not args.lhs or not args.rhs:
        print("mult requires --lhs and --rhs", file=sys.stderr)
        return 2
    H = hecke(N, e)
    try:
        a = parse_element(args.lhs, H)
        b = parse_element(args.rhs, H)
    except ValueError as exc:
        print(f"bad expression: {exc}", file=sys.stderr)
        return 2
    _emit(element_text(H.multiply(a, b)) + "\n", args, n)
    return 0


def _cmd_graph(args) -> int:
    N, e = args.rank, args.level
    n = cyc_order(N, e)
    if args.what in ("gen-a", "gen-d"):
        g = gen_type_a(N, e) if args.what == "gen-a" else gen_type_d(N, e)
        _emit(format_graph(g), args, n)
        return 0
    if args.graph_in:
        g = load_graph(args.graph_in)
    elif args.name:
        g = bundled_graph(args.name)
    else:
        print("verify/spectrum require --in FILE or --name "
              f"{'|'.join(BUNDLED)}", file=sys.stderr)
        return 2
    if g.N != N:
        print(f"graph rank {g.N} does not match --rank {N}",
              file=sys.stderr)
        return 2
    if args.what == "verify":
        rep = verify(g, e)
        spec = rep.pop("spectrum", None)
        if spec is not None:
            rep["spectrum"] = {str(k): m for k, m in sorted(spec.items())}
        _emit_json(rep, args, n)
        return 0 if rep["ok"] else 1
    spec = joint_spectrum(g, e)
    if args.svg:
        v = variety(N, e)
        if spec is None:
            overlay = first_coordinate_overlay(v)
        else:
            overlay = [(float(p.z[0].embed(20).real),
                        float(p.z[0].embed(20).imag), mult)
                       for p in v.points
                       for mult in [spec.get(p.k, 0)] if mult]
        head = "<!-- " + " | ".join(_provenance(args, n)) + " -->\n"
        with open(args.svg, "w") as fh:
            fh.write(head + hypocycloid_svg(N, overlay=overlay) + "\n")
    if spec is None:
        _emit_json({"supported_on_variety": False}, args, n)
        return 1
    _emit_json({"supported_on_variety": True,
                "spectrum": {str(k): m for k, m in sorted(spec.items())}},
               args, n)
    return 0


# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="nhedral", description=__doc__)
    top.add_argument("--version", action="version", version=__version__)
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, level=True, order=False):
        p.add_argument("--rank", type=int, required=True, metavar="N")
        if level:
            p.add_argument("--level", type=int, required=True, metavar="e")
        if order:
            p.add_argument("--order", type=int, required=True, metavar="M")
        p.add_argument("--force", action="store_true",
                       help="override the desk-scale guard rails")
        p.add_argument("--numeric", type=int, default=0, metavar="DIGITS",
                       help="decimal embedding instead of cyclotomic text")
        p.add_argument("--out", metavar="FILE")
        p.add_argument("--threads", type=int, default=1,
                       help="accepted for interface compatibility; "
                            "outputs are byte-identical at any value")

    p = sub.add_parser("weights")
    p.add_argument("what", choices=["census"])
    common(p)
    p.set_defaults(fn=_cmd_weights)

    p = sub.add_parser("chebyshev")
    p.add_argument("--max-sum", type=int, required=True, metavar="S")
    p.add_argument("--json", action="store_true")
    p.add_argument("--latex", action="store_true")
    common(p, level=False)
    p.set_defaults(fn=_cmd_chebyshev, level=None)

    p = sub.add_parser("fusion")
    p.add_argument("what", choices=["table", "smatrix", "tmatrix"])
    common(p)
    p.set_defaults(fn=_cmd_fusion)

    p = sub.add_parser("koornwinder")
    p.add_argument("what", choices=["points", "plot", "census"])
    common(p)
    p.set_defaults(fn=_cmd_koornwinder)

    p = sub.add_parser("center")
    p.add_argument("what", choices=["simples", "rank", "smatrix",
                                    "tmatrix", "cm"])
    p.add_argument("--unitary", action="store_true")
    common(p)
    p.set_defaults(fn=_cmd_center)

    p = sub.add_parser("fourier")
    p.add_argument("what", choices=["symbols", "frobenius", "matrix",
                                    "compare"])
    p.add_argument("--r-convention", choices=["e", "m"], default="m")
    common(p, level=False, order=True)
    p.set_defaults(fn=_cmd_fourier, level=None)

    p = sub.add_parser("nhedral")
    p.add_argument("what", choices=["dim", "mult", "onedim", "rep"])
    p.add_argument("--lhs")
    p.add_argument("--rhs")
    common(p)
    p.set_defaults(fn=_cmd_nhedral)

    p = sub.add_parser("graph")
    p.add_argument("what", choices=["gen-a", "gen-d", "verify", "spectrum"])
    p.add_argument("--in", dest="graph_in", metavar="FILE")
    p.add_argument("--name", choices=list(BUNDLED))
    p.add_argument("--svg", metavar="FILE")
    common(p)
    p.set_defaults(fn=_cmd_graph)

    return top


def run(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if _guarded(args):
        return 2
    try:
        return args.fn(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
