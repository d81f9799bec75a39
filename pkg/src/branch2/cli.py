"""branch2 command line.

    branch2 slope decompose 2/3
    branch2 census report 10_98 1
    branch2 --format machine hyperbolic length 2 3
    branch2 hyperbolic sweep --max-norm 400 --out-dir out/

Exit status: 0 on success, 1 when an input violates a precondition, 2 for
usage errors.  ``--format machine`` prints one key=value pair per line.
Negative slopes can be passed directly ("-1/3"); a complex argument that
starts with "-i" needs "--" before it.
"""

from __future__ import annotations

import argparse
import csv
import os
import re
import sys
from functools import lru_cache

from . import census as census_mod
from . import hyperbolic as hyp
from .involution import QuotientKind, SymmetryType, extend_involution
from .seifert import SeifertInvariants, euler_number, quotient_h1_order, quotient_invariants, sfs_h1_order
from .slopes import Slope, slope_to_word, twist_exponents
from .surgery import INFINITE, FramedLink, blow_down, h1_order, rolfsen_twist
from .tangles import diagram_determinant, slope_to_twist_vector, two_bridge_diagram

MACHINE_FORMAT_VERSION = 1


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let "-1/3" and "-2" through as positionals
        self._negative_number_matcher = re.compile(r"^-\d|^-\.\d")

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _slope(text):
    try:
        return Slope.parse(text)
    except ValueError as err:
        raise argparse.ArgumentTypeError(str(err)) from None


def _int(text):
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def _complex(text):
    try:
        return hyp.parse_complex(text)
    except ValueError as err:
        raise argparse.ArgumentTypeError(str(err)) from None


def _symtype(text):
    try:
        return SymmetryType.parse(text)
    except ValueError as err:
        raise argparse.ArgumentTypeError(str(err)) from None


def _common():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("text", "machine"), default=argparse.SUPPRESS)
    p.add_argument("--census", metavar="FILE", default=argparse.SUPPRESS)
    return p


@lru_cache(maxsize=None)
def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="branch2", description="Branched double covers of Dehn surgeries.")
    parser.add_argument("--format", choices=("text", "machine"), default="text")
    parser.add_argument("--census", metavar="FILE", default=None, help=f"census data file (default ${census_mod.CENSUS_ENV})")
    top = parser.add_subparsers(dest="group", required=True, parser_class=_Parser)

    def leaf(sub, name, func, help):
        p = sub.add_parser(name, help=help, parents=[common])
        p.set_defaults(func=func)
        return p

    g = top.add_parser("slope", help="slopes and SL(2,Z) words").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = leaf(g, "decompose", cmd_slope_decompose, "canonical S/T word of a slope")
    p.add_argument("slope", type=_slope)

    g = top.add_parser("tangle", help="rational tangles and two-bridge links").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = leaf(g, "bridge", cmd_tangle_bridge, "two-bridge link of a slope as a PD diagram")
    p.add_argument("slope", type=_slope)
    p = leaf(g, "det", cmd_tangle_det, "Goeritz determinant of the two-bridge link")
    p.add_argument("slope", type=_slope)

    g = top.add_parser("surgery", help="framed links").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = leaf(g, "h1", cmd_surgery_h1, "order of H_1 of the surgered manifold")
    p.add_argument("file")
    p = leaf(g, "twist", cmd_surgery_twist, "Rolfsen twist along a component")
    p.add_argument("file")
    p.add_argument("component")
    p.add_argument("n", type=_int)
    p = leaf(g, "blowdown", cmd_surgery_blowdown, "blow down a +-1 framed unknot")
    p.add_argument("file")
    p.add_argument("component")

    g = top.add_parser("seifert", help="Seifert invariants").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = leaf(g, "quotient", cmd_seifert_quotient, "invariants of the (E,E) quotient of a torus knot filling")
    p.add_argument("p", type=_int)
    p.add_argument("q", type=_int)
    p.add_argument("filling", type=_slope)
    p = leaf(g, "h1", cmd_seifert_h1, "order of H_1 and Euler number")
    p.add_argument("invariants")

    g = top.add_parser("involution", help="involutions under filling").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = leaf(g, "extend", cmd_involution_extend, "extend an involution over a filling")
    p.add_argument("type", type=_symtype)
    p.add_argument("slope", type=_slope)
    p.add_argument("--quotient-knot", metavar="NAME")

    g = top.add_parser("census", help="symmetry census").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = leaf(g, "report", cmd_census_report, "quotients of a surgery on a census knot")
    p.add_argument("knot")
    p.add_argument("slope", type=_slope)
    p = leaf(g, "lookup", cmd_census_lookup, "census entry of a knot")
    p.add_argument("knot")
    leaf(g, "rows", cmd_census_rows, "census rows with stated and listed counts")

    g = top.add_parser("hyperbolic", help="Dehn filling space numerics").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = leaf(g, "length", cmd_hyperbolic_length, "core geodesic length after p/q filling")
    p.add_argument("p", type=_int)
    p.add_argument("q", type=_int)
    p = leaf(g, "family", cmd_hyperbolic_family, "the A_w, B_w, E_w family at w")
    p.add_argument("w", type=_complex)
    p.add_argument("--zeta", type=_complex, default=1j)
    p = leaf(g, "sweep", cmd_hyperbolic_sweep, "length law and convergence sweep with CSV and figures")
    p.add_argument("--max-norm", type=_int, default=400)
    p.add_argument("--out-dir", default=None, help="write CSV files and PNG figures here")
    return parser


class Output:
    def __init__(self, fmt, stream):
        self.fmt = fmt
        self.stream = stream

    @property
    def machine(self):
        return self.fmt == "machine"

    def text(self, line=""):
        if not self.machine:
            print(line, file=self.stream)

    def kv(self, key, value):
        if self.machine:
            print(f"{key}={value}", file=self.stream)


def _h1_text(order):
    return "inf" if order == INFINITE else str(order)


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def cmd_slope_decompose(args, out):
    word = slope_to_word(args.slope)
    out.text(word.text())
    out.kv("slope", args.slope)
    out.kv("word", word.text())
    out.kv("exponents", ",".join(str(a) for a in twist_exponents(args.slope)))
    (a, b), (c, d) = word.matrix
    out.kv("matrix", f"{a},{b},{c},{d}")


def cmd_tangle_bridge(args, out):
    vec = slope_to_twist_vector(args.slope)
    diagram = two_bridge_diagram(args.slope)
    out.text(f"two-bridge link b({args.slope}), twist vector ({', '.join(map(str, vec))})")
    out.text(f"{len(diagram.crossings)} crossings, {len(diagram.components)} component(s)")
    out.text(diagram.to_text().rstrip("\n"))
    out.kv("slope", args.slope)
    out.kv("twist_vector", ",".join(map(str, vec)))
    out.kv("crossings", len(diagram.crossings))
    out.kv("components", len(diagram.components))
    for x in diagram.crossings:
        out.kv("pd", ",".join(f"{v:+d}" if i == 4 else str(v) for i, v in enumerate(x)))


def cmd_tangle_det(args, out):
    det = diagram_determinant(two_bridge_diagram(args.slope))
    out.text(str(det))
    out.kv("slope", args.slope)
    out.kv("determinant", det)


def cmd_surgery_h1(args, out):
    link = FramedLink.from_text(_read(args.file))
    order = h1_order(link)
    out.text(_h1_text(order))
    out.kv("components", len(link))
    out.kv("h1_order", _h1_text(order))


def _emit_link(link, out):
    out.text(link.to_text().rstrip("\n"))
    out.kv("components", len(link))
    for c in link.components:
        out.kv(f"framing.{c.name}", c.framing)
    out.kv("linking", ";".join(",".join(map(str, row)) for row in link.linking))
    out.kv("h1_order", _h1_text(h1_order(link)))


def cmd_surgery_twist(args, out):
    link = FramedLink.from_text(_read(args.file))
    _emit_link(rolfsen_twist(link, link.index(args.component), args.n), out)


def cmd_surgery_blowdown(args, out):
    link = FramedLink.from_text(_read(args.file))
    _emit_link(blow_down(link, link.index(args.component)), out)


def cmd_seifert_quotient(args, out):
    inv = quotient_invariants(args.p, args.q, args.filling)
    order = quotient_h1_order(args.p, args.q, args.filling.p, args.filling.q)
    out.text(str(inv))
    out.text(f"|H_1| = {order}")
    out.kv("invariants", inv)
    out.kv("h1_order", order)


def cmd_seifert_h1(args, out):
    inv = SeifertInvariants.parse(args.invariants)
    order = sfs_h1_order(inv)
    e = euler_number(inv)
    out.text(f"|H_1| = {_h1_text(order)}, euler number {e}")
    out.kv("invariants", inv)
    out.kv("h1_order", _h1_text(order))
    out.kv("euler_number", e)


def cmd_involution_extend(args, out):
    res = extend_involution(args.type, args.slope, args.quotient_knot)
    if res.degenerate:
        out.text(f"{args.type}: degenerate type, {res.note}")
    elif not res.extends:
        out.text(f"{args.type} at {args.slope}: does not extend ({res.note})")
    else:
        action = "free" if res.free else f"{res.branch_components} branch component(s)"
        out.text(f"{args.type} at {args.slope}: extends, {action}, quotient {res.quotient}")
    out.kv("type", args.type.name)
    out.kv("slope", args.slope)
    out.kv("extends", str(res.extends).lower())
    out.kv("free", str(res.free).lower())
    out.kv("degenerate", str(res.degenerate).lower())
    out.kv("branch_components", res.branch_components)
    out.kv("quotient_kind", res.quotient.kind.name)
    out.kv("quotient", res.quotient)


def _census(args):
    return census_mod.get_census(args.census)


def cmd_census_report(args, out):
    rep = census_mod.quotient_report(args.knot, args.slope, _census(args))
    n = len(rep)
    out.text(f"{args.knot}({args.slope}): {n} quotient(s)" if n else f"{args.knot}({args.slope}): no quotients")
    if rep.via:
        out.text(f"  same manifold as S3_{rep.via[0]}({rep.via[1]})")
    for t, res in rep.results:
        if not res.extends:
            status = "degenerate" if res.degenerate else "does not extend"
        elif res.quotient.kind is QuotientKind.SINGULAR:
            status = "extends, quotient singular"
        else:
            action = "free" if res.free else f"branched along {res.branch_components} component(s)"
            status = f"{res.quotient}, {action}"
        out.text(f"  {t}: {status}")
    generic = sum(1 for _, r in rep.results if r.extends and r.quotient.kind is not QuotientKind.SINGULAR)
    for q in rep.quotients[generic:]:
        out.text(f"  recorded: {q}")
    if n:
        out.text("  S3 among quotients" if rep.has_three_sphere() else "  no S3 quotient")
    for f in rep.facts:
        out.text(f"  fact: {f.describe()}  [{f.anchor}]")

    out.kv("knot", args.knot)
    out.kv("slope", args.slope)
    out.kv("quotients", n)
    for i, q in enumerate(rep.quotients, 1):
        out.kv(f"quotient.{i}", q)
        out.kv(f"quotient.{i}.kind", q.kind.name)
    out.kv("three_sphere", str(rep.has_three_sphere()).lower())
    out.kv("symmetry_group", rep.symmetry_group or "-")
    out.kv("exceptional", str(rep.exceptional).lower())
    for i, f in enumerate(rep.facts, 1):
        out.kv(f"fact.{i}", f.describe())


def cmd_census_lookup(args, out):
    e = _census(args).lookup(args.knot)
    classes = ",".join(t.name for t in e.sorted_classes())
    if not e.tabulated:
        classes_text = "not tabulated"
    else:
        classes_text = ", ".join(str(t) for t in e.sorted_classes()) or "none"
    out.text(f"{e.knot}: {classes_text}")
    if e.s1e_quotient_knotted is not None:
        q = "knotted" if e.s1e_quotient_knotted else "unknotted"
        out.text(f"  (S1,∅) quotient {q}" + (f" ({e.quotient_knot})" if e.quotient_knot else ""))
    if e.higher_symmetry:
        out.text(f"  higher symmetry {e.higher_symmetry}")
    if e.torus:
        out.text(f"  torus knot T{e.torus}")
    out.kv("knot", e.knot)
    out.kv("classes", classes if e.tabulated else "?")
    out.kv("s1e_quotient", {None: "-", True: "knotted", False: "unknotted"}[e.s1e_quotient_knotted])
    out.kv("higher", e.higher_symmetry or "-")
    out.kv("row", e.row or "-")


def cmd_census_rows(args, out):
    c = _census(args)
    for r in c.rows.values():
        stated = "-" if r.stated is None else r.stated
        flag = "" if r.stated in (None, r.listed) else "  (count differs)"
        out.text(f"{r.ident:24} stated {stated!s:>3}  listed {r.listed:>3}  {r.label}{flag}")
        out.kv(f"row.{r.ident}", f"{stated},{r.listed}")
    out.text(f"{len(c)} knots")
    out.kv("knots", len(c))


def cmd_hyperbolic_length(args, out):
    length = hyp.core_geodesic_length(args.p, args.q)
    ell = hyp.core_complex_length(args.p, args.q)
    out.text(f"{length:.12g}")
    out.kv("p", args.p)
    out.kv("q", args.q)
    out.kv("length", f"{length:.12g}")
    out.kv("complex_length", hyp.format_complex(ell))


def cmd_hyperbolic_family(args, out):
    fam = hyp.filling_family(args.w, args.zeta)
    row = hyp.family_row(args.w, args.zeta)
    out.text(f"w = {row['w']}, zeta = {hyp.format_complex(fam.zeta)}")
    out.text(f"A: {fam.A}  trace {row['trace_A']}  {row['kind_A']}")
    out.text(f"B: {fam.B}  trace {row['trace_B']}  {row['kind_B']}")
    if fam.E is not None:
        out.text(f"E: {fam.E}")
        out.text(f"residuals: {row['residual_A']} {row['residual_B']}")
    for k, v in row.items():
        out.kv(k, v if v != "" else "-")


def cmd_hyperbolic_sweep(args, out):
    if args.max_norm < 1 or args.max_norm > 10**6:
        raise ValueError("--max-norm must be between 1 and 10^6")
    samples = hyp.length_sweep(args.max_norm)
    ws = [10.0**k for k in range(1, 5)]
    rows = [hyp.family_row(w) for w in ws]
    residuals = [hyp.conjugation_residual(hyp.filling_family(w)) for w in ws]
    worst_rel = max(s.relation for s in samples)
    worst_len = max(s.error for s in samples)
    decreasing = all(a[0] > b[0] for a, b in zip(residuals, residuals[1:]))

    out.text(f"{len(samples)} coprime pairs with p^2+q^2 <= {args.max_norm}")
    out.text(f"max relation residual {worst_rel:.3e}, max length error {worst_len:.3e}")
    out.text("w,residual_A,residual_B")
    for w, (ra, rb) in zip(ws, residuals):
        out.text(f"{w:g},{ra:.6e},{rb:.3e}")
    out.kv("pairs", len(samples))
    out.kv("max_relation_residual", repr(worst_rel))
    out.kv("max_length_error", repr(worst_len))
    out.kv("residual_decreasing", str(decreasing).lower())

    if args.out_dir:
        from . import plotting

        os.makedirs(args.out_dir, exist_ok=True)
        law = os.path.join(args.out_dir, "length_law.csv")
        with open(law, "w", newline="") as fh:
            wr = csv.writer(fh)
            wr.writerow(["p", "q", "relation_residual", "length", "expected"])
            for s in samples:
                wr.writerow([s.p, s.q, repr(s.relation), repr(s.length), repr(s.expected)])
        fam_csv = os.path.join(args.out_dir, "family.csv")
        with open(fam_csv, "w", newline="") as fh:
            wr = csv.DictWriter(fh, fieldnames=list(rows[0]))
            wr.writeheader()
            wr.writerows(rows)
        figs = [
            plotting.plot_length_law(samples, os.path.join(args.out_dir, "length_law.png")),
            plotting.plot_convergence(ws, residuals, os.path.join(args.out_dir, "convergence.png")),
        ]
        for path in (law, fam_csv, *figs):
            out.text(f"wrote {path}")
            out.kv("wrote", path)


EXPECTED_ERRORS = (ValueError, ArithmeticError, KeyError, OSError, UnicodeError)


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as err:
        print(err, file=stderr)
        return 2
    except SystemExit as exc:
        # --help
        return 0 if exc.code in (0, None) else 2
    out = Output(args.format, stdout)
    if out.machine:
        out.kv("format_version", MACHINE_FORMAT_VERSION)
    try:
        args.func(args, out)
    except census_mod.UnknownKnot as err:
        print(f"error: {err}", file=stderr)
        return 1
    except EXPECTED_ERRORS as err:
        print(f"error: {err}", file=stderr)
        return 1
    return 0


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
