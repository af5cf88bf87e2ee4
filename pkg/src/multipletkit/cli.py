"""Command-line front end.

Every subcommand prints a human-readable table on stdout.  ``--json PATH``
and ``--csv PATH`` write machine-readable copies; each JSON artifact carries a
run manifest.  Exit codes: 0 pass, 1 verification failure or runtime error,
2 usage error.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import json
import random
import sys
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence

from . import __version__, config
from .characters import affine_spin_character, weyl_kac_character
from .clifford import superalgebra_checks
from .diagram import figure, kernel_figure
from .dirac_finite import finite_dirac_report
from .dirac_loop import affine_dirac_trivial, loop_casimir_check
from .errors import CapExceeded, MultipletkitError
from .multiplets import verify_affine_gkrs, verify_finite_gkrs
from .properties import PropertyResult, index_identity, run_all, weyl_isometry
from .reps import build_irrep, lie_algebra
from .rootsystem import RootSystem, dual_coxeter, parse_subalgebra, subsystem_to_json
from .weyl import AffineWeight, affine_orbit, in_fundamental_alcove, orbit_csv_rows

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunManifest:
    command: str
    parameters: Dict[str, Any]
    version: str = __version__
    caps: Dict[str, int] = field(default_factory=lambda: asdict(config.caps()))
    summary: Dict[str, Any] = field(default_factory=dict)
    wall_time_s: Optional[str] = None

    def to_json(self) -> dict:
        return asdict(self)


# ---------------------------------------------------------------- parsing


def parse_weight(text: str, rank: Optional[int] = None) -> tuple:
    try:
        coords = tuple(Fraction(t.strip()) for t in text.split(",") if t.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse weight {text!r}") from exc
    if rank is not None and coords == (Fraction(0),):
        coords = (Fraction(0),) * rank
    if rank is not None and len(coords) != rank:
        raise UsageError(f"weight {text!r} needs {rank} coordinates")
    return coords


def parse_affine(text: str, level: Optional[str], rank: int) -> AffineWeight:
    """``m,l1..lr`` or ``l1..lr`` (energy 0); the level comes from --level."""
    coords = parse_weight(text)
    if coords == (Fraction(0),):
        coords = (Fraction(0),) * rank
    if len(coords) == rank:
        coords = (Fraction(0),) + coords
    if len(coords) != rank + 1:
        raise UsageError(f"affine weight {text!r} needs {rank} or {rank + 1} coordinates")
    try:
        h = Fraction(level) if level is not None else Fraction(0)
    except ValueError as exc:
        raise UsageError(f"cannot parse level {level!r}") from exc
    return AffineWeight(coords[0], coords[1:], h)


def root_system(label: Optional[str]) -> RootSystem:
    if not label:
        raise UsageError("--g is required")
    try:
        return RootSystem(label)
    except MultipletkitError as exc:
        raise UsageError(str(exc)) from exc


def subalgebra(rs: RootSystem, spec: Optional[str]):
    if not spec:
        raise UsageError("--h is required")
    try:
        return parse_subalgebra(rs, spec)
    except (MultipletkitError, KeyError, ValueError) as exc:
        raise UsageError(f"bad subalgebra {spec!r}: {exc}") from exc


def _cutoff(args) -> int:
    if args.N is None:
        raise UsageError("--N is required")
    if args.N < 0:
        raise UsageError("--N must be non-negative")
    return args.N


# ---------------------------------------------------------------- output


def _emit(args, manifest: RunManifest, report: Any, rows: Optional[List[List[str]]] = None, header=None) -> None:
    manifest.summary = args._summary
    manifest.wall_time_s = None if args.reproducible else f"{time.perf_counter() - args._start:.3f}"
    if getattr(args, "json", None):
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump({"manifest": manifest.to_json(), "report": report}, fh, indent=2, ensure_ascii=False)
            fh.write("\n")
    if getattr(args, "csv", None) and rows is not None:
        with open(args.csv, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh)
            w.writerow([f"# multipletkit {manifest.version} {manifest.command} {json.dumps(manifest.parameters, sort_keys=True)}"])
            if header:
                w.writerow(header)
            w.writerows(rows)


def _params(args) -> Dict[str, Any]:
    skip = {"func", "json", "csv", "threads", "reproducible"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip and not k.startswith("_") and v is not None}


def _fmt(coords: Sequence) -> str:
    return "(" + ",".join(str(x) for x in coords) + ")"


def _sign(s: int) -> str:
    return "+" if s > 0 else "-"


# ---------------------------------------------------------------- commands


def cmd_roots(args) -> int:
    rs = root_system(args.g)
    report = rs.to_json()
    report["dual_coxeter"] = dual_coxeter(rs)
    report["dim"] = rs.dim
    if args.h:
        report["subalgebra"] = subsystem_to_json(subalgebra(rs, args.h))
    print(f"{rs.type_label}: rank {rs.rank}, dim {rs.dim}, {len(rs.positive_roots)} positive roots, dual Coxeter {dual_coxeter(rs)}")
    for a in rs.positive_roots:
        print("  " + _fmt(a))
    rows = [[str(x) for x in a] for a in rs.positive_roots]
    args._summary = {"positive_roots": len(rs.positive_roots)}
    _emit(args, args._manifest, report, rows)
    return EXIT_OK


def cmd_orbit(args) -> int:
    rs = root_system(args.g)
    lam = parse_affine(args.__dict__["lambda"] or "0", args.level, rs.rank)
    N = _cutoff(args)
    if lam.h <= 0:
        raise UsageError("--level must be positive for orbit enumeration")
    if not in_fundamental_alcove(rs, lam):
        raise UsageError(f"{lam} is not in the fundamental alcove")
    pts = affine_orbit(rs, lam, N)
    rows = orbit_csv_rows(pts)
    header = ["m"] + [f"lambda{i + 1}" for i in range(rs.rank)] + ["h", "sign"]
    print(" ".join(header))
    for r in rows:
        print(" ".join(r))
    args._summary = {"points": len(rows)}
    _emit(args, args._manifest, {"header": header, "rows": rows}, rows, header)
    return EXIT_OK


def cmd_character(args) -> int:
    rs = root_system(args.g)
    N = _cutoff(args)
    if args.spin:
        sub = subalgebra(rs, args.h)
        plus, minus = affine_spin_character(rs, sub, N)
        series = {"plus": plus, "minus": minus}
    else:
        rd = subalgebra(rs, args.h) if args.h else rs
        lam = parse_affine(args.__dict__["lambda"] or "0", args.level, rs.rank)
        series = {"character": weyl_kac_character(rd, lam, N)}
    if args.shift_to_zero:
        series = {k: s.shifted_to_zero() for k, s in series.items()}
    report = {k: s.to_json() for k, s in series.items()}
    rows = []
    for name, s in series.items():
        for m, ch in s.coeffs.items():
            for w, mult in ch.sorted_items():
                rows.append([name, str(m)] + [str(x) for x in w] + [str(mult)])
                print(f"{name} m={m} {_fmt(w)} x{mult}")
    args._summary = {k: len(s.coeffs) for k, s in series.items()}
    _emit(args, args._manifest, report, rows, ["series", "m"] + [f"lambda{i + 1}" for i in range(rs.rank)] + ["mult"])
    return EXIT_OK


def cmd_multiplet(args) -> int:
    rs = root_system(args.g)
    sub = subalgebra(rs, args.h)
    if args.affine:
        lam = parse_affine(args.__dict__["lambda"] or "0", args.level, rs.rank)
        rep = verify_affine_gkrs(rs, sub, lam, _cutoff(args))
    else:
        lam = parse_weight(args.__dict__["lambda"] or "0", rs.rank)
        try:
            rep = verify_finite_gkrs(rs, sub, lam)
        except MultipletkitError as exc:
            raise UsageError(str(exc)) from exc
    shown = str(lam) if args.affine else _fmt(lam)
    print(f"{rs.type_label} > {rep.pair[1]}  lambda {shown}")
    rows = []
    for k, e in enumerate(rep.entries):
        if args.affine:
            row = [_sign(e.sign), str(e.mu.m), *[str(x) for x in e.mu.lam], str(e.mu.h)]
            print(f"  {row[0]}  m={e.mu.m}  {_fmt(e.mu.lam)}  h={e.mu.h}")
        else:
            row = [_sign(e.sign), *[str(x) for x in e.mu], str(rep.dims[k])]
            print(f"  {row[0]}  {_fmt(e.mu)}  dim {rep.dims[k]}")
        rows.append(row)
    ok = True
    if args.verify:
        ok = bool(rep.verified)
        print("character identity: " + ("verified" if ok else f"FAILED witness={rep.witness}"))
        if args.affine:
            print(f"checked through energy {rep.max_energy}")
    args._summary = {"entries": len(rows), "verified": rep.verified if args.verify else None}
    _emit(args, args._manifest, rep.to_json(), rows)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_dirac_finite(args) -> int:
    rs = root_system(args.g)
    sub = subalgebra(rs, args.h)
    lam = parse_weight(args.__dict__["lambda"] or "0", rs.rank)
    if not (rs.is_integral(lam) and rs.is_dominant(lam)):
        raise UsageError(f"{_fmt(lam)} is not dominant integral")
    rep = finite_dirac_report(rs, sub, lam)
    print(f"{rs.type_label} > {rep['pair'][1]}  lambda {_fmt(lam)}  dim {rep['dim']}  blocks {rep['blocks']}")
    rows = []
    for r in rep["kernel"]:
        print(f"  {r['side']}  {_fmt(r['mu'])}  x{r['dim']}")
        rows.append([r["side"], *r["mu"], str(r["dim"])])
    print(f"square checks: {rep['square_checks']}  kernel dim {rep['kernel_dim']}  matches multiplet: {rep['matches_multiplet']}  index: {rep['index_matches']}")
    print("PASS" if rep["passed"] else "FAIL")
    args._summary = {"passed": rep["passed"]}
    _emit(args, args._manifest, rep, rows)
    return EXIT_OK if rep["passed"] else EXIT_FAIL


def cmd_dirac_loop(args) -> int:
    rs = root_system(args.g)
    sub = subalgebra(rs, args.h)
    N = _cutoff(args)
    if args.__dict__["lambda"] and any(parse_weight(args.__dict__["lambda"])):
        raise UsageError("the loop Dirac operator is built for the trivial representation only")
    _, rep = affine_dirac_trivial(rs, sub, N)
    out = rep.to_json()
    out["pair"] = [rs.type_label, sub.label]
    print(f"L{rs.type_label} > L{sub.label}  N={N}  Fock dim {rep.dim}  raw kernel {rep.raw_kernel_dim}" + ("  (D = 0)" if rep.D_is_zero else ""))
    rows = []
    for r in rep.kernel_rows():
        print(f"  {r['side']}  m={r['m']}  {_fmt(r['weight'])}  h={r['level']}  x{r['dim']}")
        rows.append([r["side"], r["m"], *r["weight"], r["level"], str(r["dim"])])
    print(f"square checks: {out['square_checks']}  matches multiplet: {rep.matches_multiplet}  index: {rep.index_matches}")
    if args.figure:
        if rs.rank != 1:
            raise UsageError("--figure draws rank-one pairs only")
        kernel = list(rep.kernel_plus) + list(rep.kernel_minus)
        text = kernel_figure(kernel, rep.fock_weights, N)
        out["figure"] = text
        print(text, end="")
    print("PASS" if rep.passed else "FAIL")
    args._summary = {"passed": rep.passed}
    _emit(args, args._manifest, out, rows)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_figure(args) -> int:
    rs = root_system(args.g or "A1")
    sub = subalgebra(rs, args.h or "t")
    if rs.rank != 1:
        raise UsageError("figures are drawn for rank-one pairs only")
    N = 10 if args.N is None else _cutoff(args)
    text = figure(rs, sub, N)
    print(text, end="")
    args._summary = {"rows": N + 1}
    _emit(args, args._manifest, {"figure": text})
    return EXIT_OK


# ---------------------------------------------------------------- selftest


def _check(name: str, fn: Callable[[], bool], witness: Callable[[], Any] = lambda: None) -> PropertyResult:
    res = PropertyResult(name, cases=1)
    try:
        ok = fn()
    except Exception as exc:  # a crash is a failure with the exception as witness
        res.fail((type(exc).__name__, str(exc)))
        return res
    if not ok:
        res.fail((witness(),))
    return res


def _many(name: str, cases: Sequence[Callable[[], bool]]) -> PropertyResult:
    res = PropertyResult(name)
    for k, fn in enumerate(cases):
        one = _check(name, fn)
        res.cases += 1
        if not one.passed:
            res.fail((k,) + (one.witness or ()))
    return res


def corrupted_root_system(label: str = "B2") -> RootSystem:
    """A root system whose Gram matrix is no longer Weyl invariant."""
    rs = RootSystem(label)
    g = [list(r) for r in rs.gram]
    g[0][0] *= 2
    rs.gram = tuple(tuple(r) for r in g)
    return rs


def cap_failures() -> PropertyResult:
    """With every cap at 1 each computation stops with a clean CapExceeded."""
    jobs = [
        lambda: build_irrep(RootSystem("A2"), (1, 1)),
        lambda: verify_finite_gkrs(RootSystem("A2"), parse_subalgebra(RootSystem("A2"), "t"), (1, 0)),
        lambda: affine_dirac_trivial(RootSystem("A1"), parse_subalgebra(RootSystem("A1"), "t"), 2),
        lambda: affine_orbit(RootSystem("A1"), AffineWeight.make(0, (-1,), 2), 6),
    ]
    res = PropertyResult("cap=1 gives clean cap-exceeded errors")
    with config.override(1):
        for k, job in enumerate(jobs):
            res.cases += 1
            try:
                job()
                res.fail((k, "no error"))
            except CapExceeded as exc:
                if not str(exc).startswith("cap exceeded"):
                    res.fail((k, str(exc)))
            except Exception as exc:
                res.fail((k, type(exc).__name__, str(exc)))
    return res


def selftest_results(seed: int = 0, cases: int = 300) -> List[PropertyResult]:
    rng = random.Random(seed)
    systems = {x: RootSystem(x) for x in ("A1", "A2", "B2", "G2", "B4", "F4")}
    out: List[PropertyResult] = []
    table = {"A1": 2, "A2": 3, "B4": 7, "F4": 9, "G2": 4}
    out.append(_many("dual Coxeter table", [lambda x=x, v=v: dual_coxeter(systems[x]) == v for x, v in table.items()]))
    counts = {"A1": 1, "A2": 3, "B2": 4, "G2": 6, "B4": 16, "F4": 24}
    out.append(_many("positive root counts", [lambda x=x, v=v: len(systems[x].positive_roots) == v for x, v in counts.items()]))
    out.extend(run_all(rng, list(systems.values()), cases))

    def sub(g, h):
        return parse_subalgebra(systems[g], h)

    finite = [("A2", "A1+u1", (0, 0)), ("A2", "A1+u1", (1, 0)), ("A2", "A1+u1", (0, 1)),
              ("B2", "A1+A1", (0, 0)), ("B2", "A1+A1", (1, 0)), ("A2", "t", (1, 0))]
    out.append(_many("finite character identity", [lambda g=g, h=h, l=l: verify_finite_gkrs(systems[g], sub(g, h), l).verified for g, h, l in finite]))
    out.append(_check("affine character identity A1/t", lambda: verify_affine_gkrs(systems["A1"], sub("A1", "t"), AffineWeight.make(0, (0,), 0), 6).verified))
    out.append(_check("irrep relations and Casimir", lambda: build_irrep(systems["A2"], (1, 1)).check_relations()))

    def clifford_ok() -> bool:
        rep = superalgebra_checks(lie_algebra(systems["A1"]))
        return all(v for k, v in rep.items() if isinstance(v, bool))

    out.append(_check("Clifford superalgebra relations", clifford_ok))
    finite_reports = []

    def dirac_case(g, h, l):
        r = finite_dirac_report(systems[g], sub(g, h), l)
        finite_reports.append(r)
        return r["passed"]

    out.append(_many("finite Dirac kernel", [lambda l=l: dirac_case("A1", "t", (l,)) for l in range(3)] + [lambda: dirac_case("A2", "t", (1, 0))]))
    loop_reports = []

    def loop_case() -> bool:
        _, r = affine_dirac_trivial(systems["A1"], sub("A1", "t"), 4)
        loop_reports.append({"pair": ["A1", "t"], "N": 4, "index_matches": r.index_matches})
        return r.passed

    out.append(_check("loop Dirac kernel", loop_case))
    out.append(_check("loop Casimir", lambda: loop_casimir_check(systems["A1"], 2).passed))
    out.append(index_identity(finite_reports + loop_reports))
    bad = weyl_isometry(corrupted_root_system(), rng, 50)
    neg = PropertyResult("corrupted Gram matrix is detected", cases=1)
    if bad.passed:
        neg.fail(("isometry passed on a corrupted Gram matrix",))
    else:
        neg.witness = bad.witness
    out.append(neg)
    out.append(cap_failures())
    return out


def cmd_selftest(args) -> int:
    results = selftest_results(cases=args.cases)
    for r in results:
        print(r.line())
    passed = all(r.passed for r in results)
    print("selftest: " + ("all pass" if passed else "FAIL"))
    args._summary = {"passed": passed, "properties": len(results)}
    _emit(args, args._manifest, [r.to_json() for r in results])
    return EXIT_OK if passed else EXIT_FAIL


# ---------------------------------------------------------------- wiring


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", metavar="PATH", help="write a JSON report with run manifest")
    common.add_argument("--csv", metavar="PATH", help="write table rows as CSV")
    common.add_argument("--threads", type=int, default=1, help="accepted for compatibility; work runs on one thread")
    common.add_argument("--cap", type=int, help="set every size cap to this value")
    common.add_argument("--reproducible", action="store_true", help="omit wall time so reruns are byte-identical")

    pair = argparse.ArgumentParser(add_help=False)
    pair.add_argument("--g", help="type label of g, e.g. A2")
    pair.add_argument("--h", help="t, a label such as A1+u1, or roots=i,j;u1=k")
    pair.add_argument("--lambda", help="comma-separated weight; affine: m,l1,..,lr")
    pair.add_argument("--level", help="level h of an affine weight")
    pair.add_argument("--N", type=int, help="energy cutoff")

    p = argparse.ArgumentParser(prog="multipletkit", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sp = p.add_subparsers(dest="command", required=True)

    s = sp.add_parser("roots", parents=[common, pair], help="root system data")
    s.set_defaults(func=cmd_roots)
    s = sp.add_parser("orbit", parents=[common, pair], help="affine Weyl orbit through an energy cutoff")
    s.set_defaults(func=cmd_orbit)
    s = sp.add_parser("character", parents=[common, pair], help="truncated characters")
    s.add_argument("--spin", action="store_true", help="half-spin characters of the loop complement")
    s.add_argument("--shift-to-zero", action="store_true", help="renormalize so the lowest energy is 0")
    s.set_defaults(func=cmd_character)
    s = sp.add_parser("multiplet", parents=[common, pair], help="multiplet of an equal-rank pair")
    s.add_argument("--affine", action="store_true")
    s.add_argument("--verify", action="store_true", help="check the character identity")
    s.set_defaults(func=cmd_multiplet)
    s = sp.add_parser("dirac", help="cubic Dirac operator")
    dsp = s.add_subparsers(dest="mode", required=True)
    d = dsp.add_parser("finite", parents=[common, pair])
    d.set_defaults(func=cmd_dirac_finite)
    d = dsp.add_parser("loop", parents=[common, pair])
    d.add_argument("--figure", action="store_true", help="draw the kernel diagram")
    d.set_defaults(func=cmd_dirac_loop)
    s = sp.add_parser("figure", parents=[common, pair], help="spin weight diagram from characters")
    s.set_defaults(func=cmd_figure)
    s = sp.add_parser("selftest", parents=[common], help="run the invariant suite")
    s.add_argument("--cases", type=int, default=300, help="random cases for the property checks")
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    command = args.command + (f" {args.mode}" if getattr(args, "mode", None) else "")
    args._start = time.perf_counter()
    args._summary = {}
    try:
        with config.override(args.cap) if args.cap else contextlib.nullcontext():
            args._manifest = RunManifest(command, _params(args))
            return args.func(args)
    except UsageError as exc:
        print(f"multipletkit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MultipletkitError as exc:
        print(f"multipletkit: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
