"""Construction battery and homology over all coprime pairs up to a bound,
as a compact table.

    python scripts/sweep_construction.py --qmax 20
"""
import argparse

from hbknots.construction import construction_battery, coprime_pairs
from hbknots.homology import winding_after_attachment


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--qmax", type=int, default=12)
    args = ap.parse_args()

    failures = 0
    for params in coprime_pairs(args.qmax):
        bat = construction_battery(params)
        w = tuple(winding_after_attachment(params, i) for i in (1, 2, 3))
        bad = [c["name"] for c in bat["checks"] if not c["passed"]]
        failures += bool(bad)
        print(f"({params.p:2d},{params.q:2d}) q_bar={params.q_bar:2d} p_bar={params.p_bar:2d} "
              f"H1={params.hexagon_arcs(1)} H2={params.hexagon_arcs(2)} windings={w} "
              f"{'ok' if not bad else 'FAIL ' + ','.join(bad)}")
    print(f"{failures} failing pairs")
    raise SystemExit(1 if failures else 0)


if __name__ == "__main__":
    main()
