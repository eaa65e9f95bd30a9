"""Switch off one predicate at a time and count survivors.

A predicate whose removal lets candidates through is load-bearing for that
(p, q); one whose removal changes nothing is redundant there.

    python scripts/ablation.py --p 3 --q 4 --caps-delta 2
"""
import argparse
import time

from hbknots.construction import ConstructionParams
from hbknots.disksearch import SearchCaps, search
from hbknots.disksearch import predicates as pr

# the search is built around ε meeting only Δ, so this one stays on
ALWAYS_ON = {pr.EPSILON_SELF}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, default=3)
    ap.add_argument("--q", type=int, default=4)
    ap.add_argument("--caps-delta", type=int, default=3)
    ap.add_argument("--caps-wrap", type=int, default=None)
    args = ap.parse_args()

    params = ConstructionParams(args.p, args.q)
    for name in pr.PREDICATES:
        if name in ALWAYS_ON:
            continue
        t0 = time.perf_counter()
        rep = search(params, SearchCaps(args.caps_delta, args.caps_wrap, frozenset({name})),
                     any_family=True)
        print(f"{name:22s} survivors={rep.survivors:7d} {time.perf_counter() - t0:6.1f}s")


if __name__ == "__main__":
    main()
