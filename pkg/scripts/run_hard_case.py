"""Exhaustive disk search for q = 2p ± 1, with the separating-ε count.

    python scripts/run_hard_case.py --pmax 5
"""
import argparse
import json
import time

from hbknots.construction import ConstructionParams
from hbknots.disksearch import SearchCaps, search


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--pmax", type=int, default=5)
    ap.add_argument("--caps-delta", type=int, default=3)
    ap.add_argument("--caps-wrap", type=int, default=None)
    ap.add_argument("--out")
    args = ap.parse_args()

    rows = []
    for p in range(2, args.pmax + 1):
        for q in (2 * p - 1, 2 * p + 1):
            if q <= 3:
                continue
            t0 = time.perf_counter()
            rep = search(ConstructionParams(p, q), SearchCaps(args.caps_delta, args.caps_wrap))
            dt = time.perf_counter() - t0
            print(f"({p},{q}) {rep.verdict:24s} separating shapes={rep.case3_shapes} "
                  f"endpoints fired={rep.case3_endpoints_fired} {dt:6.2f}s")
            rows.append(rep.to_dict())
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(rows, fh, indent=2, sort_keys=True, ensure_ascii=False)


if __name__ == "__main__":
    main()
