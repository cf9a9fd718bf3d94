"""Cold timings of the two sides of each corpus reduction."""
import argparse
import time

from lrreduce import check_face_conditions, cli, reps, restrict_problem, schubert


def clear():
    reps.weight_table.cache_clear()
    reps._PARTITION_COUNTERS.clear()
    schubert._ENGINES.clear()


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=1)
    a = ap.parse_args()
    print(f"{'id':20s} {'face ms':>8s} {'big ms':>8s} {'small ms':>9s} {'mult':>6s}")
    for fx in cli.load_corpus():
        best = None
        for _ in range(a.repeat):
            clear()
            doc = cli.ProblemDocument.from_dict(fx)
            fd, prob = doc.face(), doc.problem()
            t0 = time.perf_counter()
            check_face_conditions(fd)
            t1 = time.perf_counter()
            m = prob.multiplicity()
            t2 = time.perf_counter()
            restrict_problem(fd, prob).multiplicity()
            t3 = time.perf_counter()
            row = ((t1 - t0) * 1e3, (t2 - t1) * 1e3, (t3 - t2) * 1e3)
            best = row if best is None else tuple(map(min, best, row))
        print(f"{fx['id']:20s} {best[0]:8.0f} {best[1]:8.0f} {best[2]:9.0f} {m:6d}")


if __name__ == "__main__":
    main()
