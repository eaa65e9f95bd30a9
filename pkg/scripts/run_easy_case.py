"""Exhaustive disk search for q = p + 1.

    python scripts/run_easy_case.py --pmax 6 --out results/easy.json
"""
import argparse
import json
import time

from hbknots.construction import ConstructionParams
from hbknots.disksearch import SearchCaps, search


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--pmax", type=int, default=6)
    ap.add_argument("--caps-delta", type=int, default=3)
    ap.add_argument("--caps-wrap", type=int, default=None)
    ap.add_argument("--out")
    args = ap.parse_args()

    rows = []
    for p in range(2, args.pmax + 1):
        params = ConstructionParams(p, p + 1)
        t0 = time.perf_counter()
        rep = search(params, SearchCaps(args.caps_delta, args.caps_wrap))
        dt = time.perf_counter() - t0
        d = rep.to_dict()
        print(f"({p},{p + 1}) {rep.verdict:24s} shapes={rep.shapes:6d} "
              f"expanded={rep.shapes_expanded:5d} {dt:6.2f}s  tally={d['tally']}")
        rows.append(d)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(rows, fh, indent=2, sort_keys=True, ensure_ascii=False)


if __name__ == "__main__":
    main()
