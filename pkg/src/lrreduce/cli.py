"""Command-line front end.

    lrreduce mult --type A5 --weights 4,2,10,6,10 10,4,12,4,2 --target 10,22,1,1,25
    lrreduce check-face --type C5 --I 1,2,3,4 --words s5 s4s5 --w s5s4s5
    lrreduce reduce --type A5 --I 1,2,4,5 --words s3 s3 --w s4s3 --weights ... --target ...
    lrreduce gen-rules --type A4 --words s3s4s2 s4s2s3 --w s2s3s4s2s3s2
    lrreduce schubert --type A5 --words s3 s3
    lrreduce replay-corpus [--type A]

Exit codes: 0 ok, 1 verification mismatch, 2 input error, 3 resource cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Sequence

from . import reduce as rd
from . import schubert as sc
from .reps import ResourceLimitError
from .rootsys import RootSystem, RootSystemError, build_root_system

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class InputError(ValueError):
    pass


# ---------------------------------------------------------------------------
# parsing


def parse_vector(text: str) -> tuple[int, ...]:
    t = text.strip().strip("()[]")
    parts = [p for p in re.split(r"[,\s]+", t) if p]
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise InputError(f"cannot parse weight {text!r}") from None


def _split_items(items: Sequence[str] | None) -> list[str]:
    out = []
    for it in items or []:
        out += [p for p in it.split(";") if p.strip()]
    return out


def parse_index_set(text: str | None) -> list[int] | None:
    if text is None:
        return None
    t = text.strip().strip("{}[]()")
    if t.lower() in ("", "none", "-", "empty"):
        return []
    try:
        return sorted({int(p) for p in re.split(r"[,\s]+", t) if p})
    except ValueError:
        raise InputError(f"cannot parse index set {text!r}") from None


def gl_to_sl(glw: Sequence[int]) -> tuple[int, ...]:
    """``(l_0, ..., l_n) -> (l_0 - l_1, ..., l_{n-1} - l_n)``; input must be weakly decreasing."""
    glw = tuple(int(x) for x in glw)
    diffs = tuple(glw[i] - glw[i + 1] for i in range(len(glw) - 1))
    if any(d < 0 for d in diffs):
        raise InputError(f"GL weight {glw} is not weakly decreasing")
    return diffs


def gl_restrict(fd: rd.FaceDatum, x, glw: Sequence[int]) -> str:
    """GL form of the restriction: permute by ``x^{-1}``, split at the cut nodes, drop GL_1 blocks."""
    v = list(glw)
    for i in x.word:
        v[i - 1], v[i] = v[i], v[i - 1]
    blocks, cur = [], [v[0]]
    for pos in range(1, len(v)):
        if pos not in fd.I:
            blocks.append(cur)
            cur = []
        cur.append(v[pos])
    blocks.append(cur)
    return "(" + "|".join(",".join(map(str, b)) for b in blocks if len(b) > 1) + ")"


@dataclass
class ProblemDocument:
    group: str
    mode: str = "sl"
    factors: list = field(default_factory=list)
    target: tuple | None = None
    I: list | None = None
    words: list = field(default_factory=list)
    w: str | None = None

    def system(self) -> RootSystem:
        try:
            return build_root_system(self.group)
        except RootSystemError as e:
            raise InputError(str(e)) from None

    def validate(self):
        sys_ = self.system()
        if self.mode not in ("sl", "gl"):
            raise InputError(f"unknown mode {self.mode!r}")
        if self.mode == "gl":
            if len(sys_.components) != 1 or sys_.name[0] != "A":
                raise InputError("GL mode needs a simple group of type A")
            if self.target is not None and self.factors:
                if sum(self.target) != sum(sum(f) for f in self.factors):
                    raise InputError(
                        f"GL weights must satisfy sum(target) = sum over factors: "
                        f"{sum(self.target)} != {sum(sum(f) for f in self.factors)}"
                    )
        want = sys_.rank + (self.mode == "gl")
        for pos, v in enumerate(list(self.factors) + ([self.target] if self.target is not None else [])):
            if len(v) != want:
                what = f"factor {pos + 1}" if pos < len(self.factors) else "target"
                raise InputError(f"{what} {tuple(v)} has length {len(v)}, expected {want}")
        return sys_

    def _sl(self, v):
        return gl_to_sl(v) if self.mode == "gl" else tuple(v)

    def problem(self) -> rd.MultiplicityProblem:
        sys_ = self.validate()
        if not self.factors or self.target is None:
            raise InputError("weights and target are required")
        try:
            return rd.MultiplicityProblem(sys_, tuple(self._sl(f) for f in self.factors), self._sl(self.target))
        except ValueError as e:
            raise InputError(str(e)) from None

    def face(self) -> rd.FaceDatum:
        sys_ = self.validate()
        if self.I is None or not self.words or self.w is None:
            raise InputError("face data needs --I, --words and --w")
        try:
            return rd.FaceDatum.from_words(sys_, self.I, self.words, self.w)
        except (RootSystemError, rd.FaceError) as e:
            raise InputError(str(e)) from None

    def echo(self) -> dict:
        out = {"factors": [list(f) for f in self.factors], "target": list(self.target) if self.target else None}
        if self.mode == "gl" and self.factors and self.target is not None:
            out["sl_factors"] = [list(gl_to_sl(f)) for f in self.factors]
            out["sl_target"] = list(gl_to_sl(self.target))
        return out

    @classmethod
    def from_args(cls, a) -> "ProblemDocument":
        return cls(
            group=a.type,
            mode=a.mode,
            factors=[parse_vector(x) for x in _split_items(getattr(a, "weights", None))],
            target=parse_vector(a.target) if getattr(a, "target", None) else None,
            I=parse_index_set(getattr(a, "I", None)),
            words=_split_items(getattr(a, "words", None)),
            w=getattr(a, "w", None),
        )

    @classmethod
    def from_dict(cls, d: dict) -> "ProblemDocument":
        return cls(
            group=d["group"],
            mode=d.get("mode", "sl"),
            factors=[tuple(f) for f in d.get("factors", [])],
            target=tuple(d["target"]) if d.get("target") is not None else None,
            I=d.get("I"),
            words=list(d.get("words", [])),
            w=d.get("w"),
        )


# ---------------------------------------------------------------------------
# commands (each returns (report, exit code))


def _base(doc: ProblemDocument) -> dict:
    return {"group": doc.group, "mode": doc.mode, "face": None, "verdicts": {}, "mult_big": None, "mult_small": None}


def _face_dict(fd: rd.FaceDatum) -> dict:
    return fd.as_dict() | {"codimension": rd.face_codimension(fd)}


def cmd_mult(doc: ProblemDocument, opts=None) -> tuple[dict, int]:
    prob = doc.problem()
    rep = _base(doc) | {"input": doc.echo()}
    rep["mult_big"] = prob.multiplicity()
    return rep, EXIT_OK


def cmd_check_face(doc: ProblemDocument, opts=None) -> tuple[dict, int]:
    fd = doc.face()
    cap = getattr(opts, "max_weyl_size", None)
    fr = rd.check_face_conditions(fd, cap)
    rep = _base(doc) | {"face": _face_dict(fd)}
    rep["verdicts"] = fr.as_dict()
    code = EXIT_OK if fr.all_hold else EXIT_MISMATCH
    if doc.factors:
        prob = doc.problem()
        ok, r = rd.in_span_I(fd.system, rd.face_gamma(fd, prob), fd.I)
        rep["verdicts"]["on_face"] = ok
        rep["verdicts"]["gamma_root_coords"] = [str(c) for c in r]
        rep["input"] = doc.echo()
        if not ok:
            code = EXIT_MISMATCH
    if fr.intersection is None:
        code = EXIT_CAP
    return rep, code


def _reduce_one(doc, fd, prob, cap) -> dict:
    r = rd.verify_reduction(fd, prob, cap)
    out = {
        "reduced": {"group": r.reduced.levi_system.name} | r.reduced.formatted(),
        "mult_big": r.mult_big,
        "mult_small": r.mult_small,
        "equal": r.equal,
    }
    if doc.mode == "gl":
        out["reduced_gl"] = {
            "factors": [gl_restrict(fd, x, f) for x, f in zip(fd.ws, doc.factors)],
            "target": gl_restrict(fd, fd.w, doc.target),
        }
    return out | {"face_report": r.face}


def cmd_reduce(doc: ProblemDocument, opts=None) -> tuple[dict, int]:
    fd = doc.face()
    cap = getattr(opts, "max_weyl_size", None)
    rep = _base(doc) | {"face": _face_dict(fd)}
    samples = getattr(opts, "samples", None)
    if samples:
        if doc.mode != "sl":
            raise InputError("random samples are generated in sl mode")
        seed = getattr(opts, "seed", 0) or 0
        method = getattr(opts, "sampler", "box")
        try:
            probs = rd.random_on_face(fd, samples, seed=seed, hi=getattr(opts, "box", 4), method=method)
        except rd.FaceError as e:
            raise InputError(str(e)) from None
        rows = []
        for p in probs:
            one = _reduce_one(doc, fd, p, cap)
            rows.append({"factors": [list(f) for f in p.factors], "target": list(p.target),
                         "mult_big": one["mult_big"], "mult_small": one["mult_small"], "equal": one["equal"]})
            rep["verdicts"] = one["face_report"].as_dict()
        rep["seed"] = seed
        rep["sampler"] = method
        rep["samples"] = rows
        rep["verdicts"]["all_equal"] = all(r["equal"] for r in rows)
        return rep, EXIT_OK if rep["verdicts"]["all_equal"] else EXIT_MISMATCH
    prob = doc.problem()
    one = _reduce_one(doc, fd, prob, cap)
    rep["input"] = doc.echo()
    rep["verdicts"] = one.pop("face_report").as_dict() | {"on_face": True, "equal": one["equal"]}
    rep.update(one)
    return rep, EXIT_OK if one["equal"] else EXIT_MISMATCH


def cmd_gen_rules(doc: ProblemDocument, opts=None) -> tuple[dict, int]:
    sys_ = doc.validate()
    if not doc.words or doc.w is None:
        raise InputError("gen-rules needs --words and --w")
    try:
        ws = [sys_.weyl(x) for x in doc.words]
        w = sys_.weyl(doc.w)
    except RootSystemError as e:
        raise InputError(str(e)) from None
    subsets = [doc.I] if doc.I is not None else None
    try:
        rules = rd.generate_rules(sys_, ws, w, subsets)
    except rd.FaceError as e:
        raise InputError(str(e)) from None
    cap = getattr(opts, "max_weyl_size", None)
    catalog = []
    ok = True
    for fd in rules:
        fr = rd.check_face_conditions(fd, cap)
        ok &= fr.all_hold
        catalog.append(_face_dict(fd) | {"verdicts": fr.as_dict()})
    rep = _base(doc) | {"rules": catalog}
    rep["verdicts"] = {"partition": True, "all_rules_verified": ok, "count": len(catalog)}
    return rep, EXIT_OK if ok else EXIT_MISMATCH


def cmd_schubert(doc: ProblemDocument, opts=None) -> tuple[dict, int]:
    sys_ = doc.validate()
    if not doc.words:
        raise InputError("schubert needs --words")
    try:
        ws = [sys_.weyl(x) for x in doc.words]
    except RootSystemError as e:
        raise InputError(str(e)) from None
    cap = getattr(opts, "max_weyl_size", None)
    prod = sc.schubert_product(sys_, ws, cap)
    rep = _base(doc)
    rep["product"] = [[str(v), str(c)] for v, c in prod.items()]
    if doc.w is not None:
        w = sys_.weyl(doc.w)
        ir = sc.intersection_report(sys_, ws, w, cap)
        rep["verdicts"] = {
            "intersection": ir.value,
            "note": ir.note,
            "disjoint_inversions": sc.disjoint_inversion_check(ws, w),
        }
    return rep, EXIT_OK


def _corpus_path(path=None):
    if path:
        return Path(path)
    return resources.files("lrreduce") / "data" / "corpus.json"


def load_corpus(path=None) -> list[dict]:
    with _corpus_path(path).open() as fh:
        return json.load(fh)["fixtures"]


def _type_matches(group: str, flt: str | None) -> bool:
    if not flt:
        return True
    f = flt.upper()
    return group.upper() == f or (f.isalpha() and all(p[0] == f for p in re.split(r"[X×*]", group.upper())))


def cmd_replay_corpus(opts=None) -> tuple[dict, int]:
    fixtures = [f for f in load_corpus(getattr(opts, "corpus", None)) if _type_matches(f["group"], getattr(opts, "type", None))]
    if not fixtures:
        return {"status": "no fixtures selected", "filter": getattr(opts, "type", None), "results": []}, EXIT_INPUT
    cap = getattr(opts, "max_weyl_size", None)
    results = []
    for fx in fixtures:
        doc = ProblemDocument.from_dict(fx)
        fd = doc.face()
        t0 = time.perf_counter()
        one = _reduce_one(doc, fd, doc.problem(), cap)
        fr = one.pop("face_report")
        row = {
            "id": fx["id"],
            "group": fx["group"],
            "mode": fx.get("mode", "sl"),
            "expected": fx["expected_mult"],
            "mult_big": one["mult_big"],
            "mult_small": one["mult_small"],
            "conditions": fr.all_hold,
            "reduced_ok": {k: one["reduced"][k] for k in ("factors", "target")} == fx["expected_reduced"],
        }
        if "expected_reduced_gl" in fx:
            row["reduced_gl_ok"] = one.get("reduced_gl") == fx["expected_reduced_gl"]
        row["ok"] = (
            row["mult_big"] == row["mult_small"] == row["expected"]
            and row["conditions"] and row["reduced_ok"] and row.get("reduced_gl_ok", True)
        )
        row["elapsed_ms"] = round(1000 * (time.perf_counter() - t0))
        results.append(row)
    passed = sum(r["ok"] for r in results)
    rep = {
        "status": "ok" if passed == len(results) else "mismatch",
        "filter": getattr(opts, "type", None),
        "passed": passed,
        "total": len(results),
        "multiplicities": [r["mult_big"] for r in results],
        "results": results,
    }
    return rep, EXIT_OK if passed == len(results) else EXIT_MISMATCH


# ---------------------------------------------------------------------------
# output


def _jsonable(x):
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, rd.FaceReport):
        return _jsonable(x.as_dict())
    return x


def _strip_timing(x):
    if isinstance(x, dict):
        return {k: (None if k == "elapsed_ms" else _strip_timing(v)) for k, v in x.items()}
    if isinstance(x, list):
        return [_strip_timing(v) for v in x]
    return x


def render(rep: dict, indent: int = 0) -> str:
    """Plain-text rendering of a report document."""
    pad = "  " * indent
    lines = []
    for k, v in rep.items():
        if isinstance(v, dict) and v:
            lines.append(f"{pad}{k}:")
            lines.append(render(v, indent + 1))
        elif isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append(f"{pad}{k}:")
            for item in v:
                lines.append(render(item, indent + 1))
                lines.append("")
        else:
            lines.append(f"{pad}{k}: {v}")
    return "\n".join(lines)


def _emit(rep: dict, as_json: bool, timing: bool, out=None):
    out = out or sys.stdout
    rep = _jsonable(rep)
    if not timing:
        rep = _strip_timing(rep)
    if as_json:
        out.write(json.dumps(rep, indent=2) + "\n")
    else:
        out.write(render(rep) + "\n")


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lrreduce", description="Reduction rules for tensor product multiplicities")
    sub = p.add_subparsers(dest="cmd", required=True)

    def common(sp, face=False, weights=False):
        sp.add_argument("--type", required=True, help="group type, e.g. A5, D5, A2xA2")
        sp.add_argument("--mode", choices=["sl", "gl"], default="sl")
        sp.add_argument("--json", action="store_true", help="emit a JSON document")
        sp.add_argument("--no-timing", action="store_true", help="report elapsed_ms as null")
        sp.add_argument("--max-weyl-size", type=int, default=None)
        sp.add_argument("--seed", type=int, default=0)
        if weights:
            sp.add_argument("--weights", nargs="+", help="factor weights, e.g. 4,2,10,6,10 10,4,12,4,2")
            sp.add_argument("--target")
        if face:
            sp.add_argument("--I", help="simple-root indices of the Levi, e.g. 1,2,4,5")
            sp.add_argument("--words", nargs="+", help="Weyl words w_1 .. w_k, e.g. s3 s4s3")
            sp.add_argument("--w", help="Weyl word w")

    common(sub.add_parser("mult", help="multiplicity of the target in the tensor product"), weights=True)
    common(sub.add_parser("check-face", help="evaluate the face conditions"), face=True, weights=True)
    r = sub.add_parser("reduce", help="restrict to the Levi and verify equality")
    common(r, face=True, weights=True)
    r.add_argument("--samples", type=int, default=0, help="verify on N seeded random on-face problems")
    r.add_argument("--box", type=int, default=4, help="upper bound for sampled free coordinates")
    r.add_argument("--sampler", choices=["box", "semigroup"], default="box",
                   help="box: uniform on-face points; semigroup: sums of positive generators")
    common(sub.add_parser("gen-rules", help="rules from an inversion-set partition"), face=True)
    common(sub.add_parser("schubert", help="Schubert product and intersection number"), face=True)
    rc = sub.add_parser("replay-corpus", help="replay the bundled example corpus")
    rc.add_argument("--type", default=None, help="filter: family letter (A) or exact group (D5)")
    rc.add_argument("--corpus", default=None, help="alternative fixture file")
    rc.add_argument("--json", action="store_true")
    rc.add_argument("--no-timing", action="store_true")
    rc.add_argument("--max-weyl-size", type=int, default=None)
    rc.add_argument("--seed", type=int, default=0)
    return p


COMMANDS = {
    "mult": cmd_mult,
    "check-face": cmd_check_face,
    "reduce": cmd_reduce,
    "gen-rules": cmd_gen_rules,
    "schubert": cmd_schubert,
}


def run(argv: Sequence[str] | None = None, out=None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    as_json = getattr(a, "json", False)
    timing = not getattr(a, "no_timing", False)
    t0 = time.perf_counter()
    try:
        if a.cmd == "replay-corpus":
            rep, code = cmd_replay_corpus(a)
        else:
            doc = ProblemDocument.from_args(a)
            rep, code = COMMANDS[a.cmd](doc, a)
    except ResourceLimitError as e:
        rep, code = {"error": "resource cap exceeded", "detail": str(e)}, EXIT_CAP
    except (InputError, RootSystemError, rd.FaceError, ValueError, KeyError, OSError) as e:
        rep, code = {"error": "input error", "detail": str(e)}, EXIT_INPUT
    except (ArithmeticError, AssertionError) as e:
        rep, code = {"error": "verification failure", "detail": str(e)}, EXIT_MISMATCH
    rep["elapsed_ms"] = round(1000 * (time.perf_counter() - t0))
    _emit(rep, as_json, timing, out)
    return code


def main(argv: Sequence[str] | None = None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
