"""Replay the bundled corpus and print one row per fixture."""
import argparse
import sys

from lrreduce import cli


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--type", default=None, help="family letter or exact group")
    ap.add_argument("--corpus", default=None)
    a = ap.parse_args()
    rep, code = cli.cmd_replay_corpus(argparse.Namespace(type=a.type, corpus=a.corpus, max_weyl_size=None))
    if code == cli.EXIT_INPUT:
        print(rep["status"])
        return code
    print(f"{'id':20s} {'expected':>8s} {'big':>6s} {'small':>6s} {'ms':>7s}  ok")
    for r in rep["results"]:
        print(f"{r['id']:20s} {r['expected']:8d} {r['mult_big']:6d} {r['mult_small']:6d} {r['elapsed_ms']:7d}  {r['ok']}")
    print(f"{rep['passed']}/{rep['total']} passed")
    return code


if __name__ == "__main__":
    sys.exit(main())
