"""Check the reduction on seeded random on-face problems for each worked rule.

Writes one JSON line per problem to stdout; a summary goes to stderr.
"""
import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass

from lrreduce import FaceDatum, build_root_system, random_on_face, verify_reduction

RULES = {
    "a5-grassmannian": ("A5", [1, 2, 4, 5], ["s3", "s3"], "s4s3"),
    "a5-projective": ("A5", [2, 3, 4, 5], ["s1", "s1"], "s2s1"),
    "a6-projective": ("A6", [2, 3, 4, 5, 6], ["s1", "s2s1"], "s3s2s1"),
    "a4-three-factor": ("A4", [2, 3, 4], ["s1", "s1", "s1"], "s3s2s1"),
    "a4-codim-two": ("A4", [1, 2], ["s3s4", "s4s2s3"], "s2s3s4s2s3"),
    "d5-quadric": ("D5", [2, 3, 4, 5], ["s1", "s1"], "s2s1"),
    "c5-lagrangian": ("C5", [1, 2, 3, 4], ["s5", "s4s5"], "s5s4s5"),
}


@dataclass
class SweepConfig:
    count: int = 50
    seed: int = 0
    hi: int = 2
    method: str = "semigroup"  # or "box"
    strict: bool = False


def sweep(name, cfg: SweepConfig):
    t, I, ws, w = RULES[name]
    fd = FaceDatum.from_words(build_root_system(t), I, ws, w)
    for prob in random_on_face(fd, cfg.count, seed=cfg.seed, hi=cfg.hi, strict=cfg.strict, method=cfg.method):
        rep = verify_reduction(fd, prob)
        yield {
            "rule": name,
            "factors": [list(f) for f in prob.factors],
            "target": list(prob.target),
            "mult_big": rep.mult_big,
            "mult_small": rep.mult_small,
            "equal": rep.equal,
        }


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--rules", nargs="*", default=sorted(RULES))
    for k, v in asdict(SweepConfig()).items():
        kind = (lambda s: s.lower() in ("1", "true", "yes")) if isinstance(v, bool) else type(v)
        ap.add_argument(f"--{k}", type=kind, default=v)
    a = ap.parse_args()
    cfg = SweepConfig(**{k: getattr(a, k) for k in asdict(SweepConfig())})
    bad = 0
    for name in a.rules:
        t0 = time.perf_counter()
        rows = list(sweep(name, cfg))
        for r in rows:
            print(json.dumps(r))
        bad += sum(not r["equal"] for r in rows)
        nz = sum(r["mult_big"] > 0 for r in rows)
        print(f"{name}: {len(rows)} problems, {nz} nonzero, {time.perf_counter() - t0:.1f}s", file=sys.stderr)
    print(f"mismatches: {bad}", file=sys.stderr)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
