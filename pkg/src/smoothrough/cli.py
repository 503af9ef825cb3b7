"""Command line interface.

Exit codes: 0 when every requested check passes, 1 on a failed check,
2 on unreadable or malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from fractions import Fraction

from . import fileio
from .algebra import (
    AxiomError, Module, check_algebra, check_unital_module, detect_unit, module_laws, trivial_module,
    with_detected_unit,
)
from .balanced import DescentError, balanced_tensor, balanced_hom, coker_dim_check
from .category import atom, identity
from .examples import (
    NotDegenerate, PairingSpec, build_pairing_algebra, double_centralizer, nonmonic_smoothening_demo,
    pairing_modules, pairing_structure_constants, standard_corpus, standard_modules,
)
from .laws import closedness_report, coherence_report
from .linalg import rank
from .morita import bimodule_adjunction, matrix_witness, pairing_witness, smooth_rough_preservation, verify_morita
from .report import Report
from .smooth_rough import (
    NotSelfInduced, canonical_unit_converse, free_rough_check, multiplier_left, multiplier_module,
    multiplier_right, roughen, smooth_of_multipliers, smooth_rough_report, smoothen, smoothening,
    theorem_check, unital_equivalence_check, unital_homotopy_check,
)

SCHEMA = 1
THEOREM_LIMIT = 36     # dim A · dim X
MORITA_LIMIT = 6       # dim V · dim W
FREE_V = atom("V", 2)


class Run:
    """Collects reports by section and renders them."""

    def __init__(self, command: str):
        self.command = command
        self.sections: dict[str, list[Report]] = {}
        self.extra: dict = {}

    def add(self, section: str, rep: Report) -> Report:
        self.sections.setdefault(section, []).append(rep)
        return rep

    @property
    def passed(self) -> bool:
        return all(r.passed for reps in self.sections.values() for r in reps)

    def summary(self) -> dict:
        out = {}
        for sec, reps in self.sections.items():
            c = Counter(ch.passed for r in reps for ch in r.checks)
            out[sec] = {"passed": c[True], "failed": c[False], "reports": len(reps)}
        return out

    def law_counts(self) -> dict:
        laws: dict[str, Counter] = {}
        for reps in self.sections.values():
            for r in reps:
                for ch in r.checks:
                    laws.setdefault(_law_name(ch.name), Counter())[ch.passed] += 1
        return {k: {"passed": v[True], "failed": v[False]} for k, v in laws.items()}

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "command": self.command,
            "passed": self.passed,
            "summary": self.summary(),
            "laws": self.law_counts(),
            "sections": {s: [r.to_dict() for r in reps] for s, reps in self.sections.items()},
            **self.extra,
        }

    def to_text(self) -> str:
        lines = []
        for sec, reps in self.sections.items():
            lines.append(f"== {sec}")
            lines.extend(str(r) for r in reps)
        for sec, c in self.summary().items():
            lines.append(f"{sec}: {c['passed']} passed, {c['failed']} failed")
        for k, v in self.extra.items():
            lines.append(f"{k}: {json.dumps(v, sort_keys=True, ensure_ascii=False, default=str)}")
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines) + "\n"


def _law_name(name: str) -> str:
    # "V⊗X0: bar_mu is A-linear" -> "bar_mu is A-linear"
    return name.split(": ", 1)[1] if ": " in name and not name.startswith(("cell", "iso", "adjunction")) else name


# -- sections ----------------------------------------------------------------------------

def run_check(run: Run, alg, modules: dict) -> None:
    rep = run.add("axioms", check_algebra(alg))
    rep.info["self_induced"] = alg.self_induced
    rep.info["unit_detected"] = detect_unit(alg) is not None
    for mid, m in modules.items():
        mr = Report(f"module {mid}", module_laws(m))
        mr.info["dim"] = m.dim
        if m.left is not None:
            mr.info["unital"] = check_unital_module(m) if alg.is_unital else None
        run.add("axioms", mr)
    lefts = [m.forget_right() for m in modules.values() if m.left is not None]
    run.add("smooth/rough", smooth_rough_report(alg, lefts))


def run_unital(run: Run, alg, modules) -> None:
    a = with_detected_unit(alg)
    conv = canonical_unit_converse(a)
    rep = Report(f"unit detection for {a.name or a.carrier}")
    rep.info.update(unital=a.is_unital, rough_over_itself=conv is not None)
    if conv is not None:
        rep.add("rough over itself ⇒ unital", conv)
    run.add("unital", rep)
    if not a.is_unital:
        return
    for m in modules:
        if m.left is None:
            continue
        m = Module(m.carrier, a, m.act_left, name=m.name)
        run.add("unital", unital_equivalence_check(m))
        if check_unital_module(m):
            run.add("unital", unital_homotopy_check(m))


def run_theorem(run: Run, alg, modules, limit: int | None = None) -> None:
    for m in modules:
        if m.left is None:
            continue
        if limit is not None and alg.dim * m.dim > limit:
            continue
        run.add("theorem", theorem_check(m.forget_right()))


def run_multipliers(run: Run, alg, v=FREE_V) -> None:
    ml, mr = multiplier_left(alg), multiplier_right(alg)
    run.add("multipliers", ml.report)
    run.add("multipliers", mr.report)
    run.add("multipliers", smooth_of_multipliers(alg))
    run.add("multipliers", free_rough_check(alg, v))


def run_pairing(run: Run, spec: PairingSpec, x0=atom("X0", 2)) -> dict:
    pa = build_pairing_algebra(spec)
    run.add("pairing", pa.report)
    a = pa.algebra
    can = multiplier_left(a).canonical_map
    s = smoothening(multiplier_module(a))
    dc = double_centralizer(pa)
    info = {
        "label": spec.label,
        "dim": a.dim,
        "self_induced": a.self_induced,
        # Smooth(M_l(A)) -> M_l(A)
        "canonical_map_rank": rank(s.bar_mu.mat),
        "canonical_map_monic": rank(s.bar_mu.mat) == s.module.dim,
        "multiplier_map_rank": rank(can.mat),
        "dim_M_l": multiplier_module(a).dim,
        "dim_M_r": multiplier_right(a).algebra.dim,
        "dim_double_centralizer": dc.dim,
        "structure_constants": [[[str(x) for x in r] for r in row] for row in pairing_structure_constants(pa)],
    }
    try:
        run.add("non-monic", nonmonic_smoothening_demo(spec))
        info["degenerate"] = True
    except NotDegenerate:
        info["degenerate"] = False
    if spec.dim_v * spec.dim_w <= MORITA_LIMIT:
        run_morita_pairing(run, pa, x0)
    return info


def run_morita_pairing(run: Run, pa, x0) -> None:
    w = pairing_witness(pa)
    k = w.alg_b
    sa = pairing_modules(pa, x0)[:2]
    tb = [trivial_module(x0, name=str(x0))]
    tb = [Module(t.carrier, k, t.act_left, name=t.name) for t in tb]
    ra = [pairing_modules(pa, x0)[2]]
    run.add("morita", verify_morita(w, smooth_a=sa, smooth_b=tb, rough_a=ra, rough_b=tb))
    rep = smooth_rough_preservation(pa.P, tb[0])
    run.add("bimodules", rep)
    b = bimodule_adjunction(pa.P, tb[0], pa.v_module)
    br = Report(f"adjunction for {pa.spec.label}")
    b.verify(br)
    run.add("bimodules", br)


def run_corpus(run: Run, max_dim: int) -> None:
    run.add("coherence", coherence_report())
    run.add("closedness", closedness_report())
    corpus = standard_corpus(max_dim)
    run.extra["corpus"] = [{"name": e.name, "kind": e.kind, "dim": e.algebra.dim,
                            "modules": [m.name for m in e.modules]} for e in corpus]
    pairing_info = []
    for e in corpus:
        a = e.algebra
        lefts = [m for m in e.modules if m.left is not None]
        run.add("smooth/rough", smooth_rough_report(a, lefts))
        run_unital(run, a, lefts)
        bal = Report(f"presentations for {e.name}")
        for m in lefts:
            t = balanced_tensor(a.regular, m.forget_right())
            h = balanced_hom(a.regular, m.forget_right())
            bal.add(f"{m.name}: cokernel presentation", coker_dim_check(t.coker))
            bal.add(f"{m.name}: kernel presentation", h.kernel.retr @ h.kernel.incl == identity(h.kernel.obj))
        run.add("presentations", bal)
        if not a.self_induced:
            continue
        run_theorem(run, a, lefts, THEOREM_LIMIT)
        run_multipliers(run, a)
        if e.pairing is not None:
            pairing_info.append(run_pairing(run, e.pairing.spec))
    m2 = matrix_witness(2)
    run.add("morita", verify_morita(m2, smooth_a=standard_modules(m2.alg_a)[:1]))
    run.extra["pairings"] = pairing_info


# -- entry point ----------------------------------------------------------------------------

def _parse_row(text: str) -> list[Fraction]:
    try:
        return [Fraction(t.strip()) for t in text.split(",") if t.strip()]
    except (ValueError, ZeroDivisionError):
        raise fileio.ParseError("--b", f"not a list of rationals: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="smoothrough", description="Exact checks for smooth and rough modules.")
    p.add_argument("--format", choices=("json", "text"), default="json")
    sub = p.add_subparsers(dest="command", required=True)
    for name in ("check", "theorem", "multipliers"):
        sub.add_parser(name).add_argument("file")
    for name in ("smoothen", "roughen"):
        sp = sub.add_parser(name)
        sp.add_argument("file")
        sp.add_argument("--module", required=True)
    sub.add_parser("morita").add_argument("file")
    sp = sub.add_parser("pairing")
    sp.add_argument("--dimv", type=int, required=True)
    sp.add_argument("--dimw", type=int, required=True)
    sp.add_argument("--b", required=True, help="comma separated row, index w*dimv + v")
    sp.add_argument("--witness-v")
    sp.add_argument("--witness-w")
    sp = sub.add_parser("corpus")
    sp.add_argument("--max-dim", type=int, default=2)
    # allow --format after the subcommand too
    for sp in sub.choices.values():
        sp.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)
    return p


def _emit(out, run_or_obj, fmt: str) -> None:
    if isinstance(run_or_obj, Run):
        text = fileio.dumps(run_or_obj.to_dict()) if fmt == "json" else run_or_obj.to_text()
    else:
        text = fileio.dumps(run_or_obj)
    out.write(text)


def _error(out, fmt: str, kind: str, message: str, **detail) -> None:
    obj = {"schema": SCHEMA, "passed": False, "error": {"kind": kind, "message": message, **detail}}
    if fmt == "json":
        out.write(fileio.dumps(obj))
    else:
        out.write(f"{kind}: {message}\n")
        for k, v in detail.items():
            out.write(f"  {k}: {json.dumps(v, ensure_ascii=False, default=str)}\n")


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    fmt = args.format
    try:
        return _dispatch(args, fmt, out)
    except fileio.ParseError as e:
        _error(out, fmt, "parse error", str(e), location=e.location)
        return 2
    except AxiomError as e:
        _error(out, fmt, "axiom failure", str(e), law=e.law, matrices=e.detail)
        return 1
    except (NotSelfInduced, DescentError) as e:
        _error(out, fmt, type(e).__name__, str(e))
        return 1
    except ValueError as e:
        _error(out, fmt, "input error", str(e))
        return 2


def _load_algebra(path: str):
    obj = fileio.read_file(path)
    return fileio.parse_algebra_file(obj, "$")


def _dispatch(args, fmt: str, out) -> int:
    cmd = args.command
    run = Run(cmd)
    if cmd == "check":
        f = _load_algebra(args.file)
        run_check(run, f.algebra, f.modules)
    elif cmd in ("smoothen", "roughen"):
        f = _load_algebra(args.file)
        if args.module not in f.modules:
            raise fileio.ParseError("--module", f"no module with id {args.module!r}")
        m = f.modules[args.module].forget_right()
        if m.left is None:
            raise fileio.ParseError("--module", "module has no left action")
        res, _ = (smoothen if cmd == "smoothen" else roughen)(m)
        new_id = f"{'Smooth' if cmd == 'smoothen' else 'Rough'}({args.module})"
        if fmt == "json":
            _emit(out, fileio.algebra_file_obj(f.algebra, {new_id: res}, {"derived_from": args.module}), fmt)
        else:
            out.write(f"{new_id}: dim {res.dim} (from dim {m.dim})\n")
        return 0
    elif cmd == "theorem":
        f = _load_algebra(args.file)
        if not f.algebra.self_induced:
            raise NotSelfInduced("the algebra is not self-induced")
        mods = list(f.modules.values()) or [f.algebra.regular]
        run_theorem(run, f.algebra, mods)
    elif cmd == "multipliers":
        f = _load_algebra(args.file)
        run_multipliers(run, f.algebra)
        run.extra["M_l"] = fileio.algebra_obj(multiplier_left(f.algebra).algebra)
        run.extra["M_r"] = fileio.algebra_obj(multiplier_right(f.algebra).algebra)
    elif cmd == "morita":
        w, samples = fileio.parse_morita_file(fileio.read_file(args.file), "$")
        run.add("morita", verify_morita(w, samples["smooth_a"], samples["smooth_b"],
                                        samples["rough_a"], samples["rough_b"]))
    elif cmd == "pairing":
        b = _parse_row(args.b)
        wv = _parse_row(args.witness_v) if args.witness_v else None
        ww = _parse_row(args.witness_w) if args.witness_w else None
        spec = PairingSpec(args.dimv, args.dimw, tuple(b), wv and tuple(wv), ww and tuple(ww))
        run.extra.update(run_pairing(run, spec))
    elif cmd == "corpus":
        if args.max_dim < 1:
            raise fileio.ParseError("--max-dim", "must be at least 1")
        run_corpus(run, args.max_dim)
    _emit(out, run, fmt)
    return 0 if run.passed else 1


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
