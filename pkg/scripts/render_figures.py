"""Write SVG drawings of the P/R patterns for a few pairs.

    python scripts/render_figures.py --outdir figures
"""
import argparse
from pathlib import Path

from hbknots.construction import ConstructionParams, generate_pattern
from hbknots.svg import render


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--outdir", default="figures")
    ap.add_argument("pairs", nargs="*", default=["2,3", "3,4", "3,5", "4,7"])
    args = ap.parse_args()
    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    for pair in args.pairs:
        p, q = map(int, pair.split(","))
        params = ConstructionParams(p, q)
        path = out / f"pattern-p{p}-q{q}.svg"
        path.write_text(render(generate_pattern(params), params), encoding="utf-8")
        print(path)


if __name__ == "__main__":
    main()
