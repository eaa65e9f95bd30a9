"""Command line front end.

    hbknots pattern --p 3 --q 4 --format json
    hbknots verify --suite all
    hbknots twobridge 2/5
    hbknots homology --pmax 50

Every flag can also come from a JSON file given with ``--config``; flags
win.  Output goes to ``--out``, else to ``$HBKNOTS_OUT_DIR/<default name>``
when that variable is set, else to stdout.  Exit codes: 0 all checks pass,
1 a verification failed, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields
from pathlib import Path

from . import homology as hom
from .construction import (
    ConstructionParams, ParameterError, construction_battery, coprime_pairs,
    generate_pattern, pattern_to_dict,
)
from .disksearch import CapsError, SearchCaps, search
from .disksearch import predicates as pr
from .svg import render
from .twobridge import (
    TwoBridgeFraction, is_hyperbolic, is_nontrivial, m_bar, mirror, normalize, rs_table,
)

SCHEMA_VERSION = 1
OUT_DIR_ENV = "HBKNOTS_OUT_DIR"
SUITES = ("remark", "census", "homology", "easy-case", "hard-case")
# default sweep bound per suite: largest q for construction and homology, largest p for searches
DEFAULT_BOUND = {"remark": 12, "census": 12, "homology": 50, "easy-case": 6, "hard-case": 5}
REMARK_CHECKS = ("a-endpoints", "c-endpoints", "b-on-∂3", "d-on-∂3", "b-shift-on-∂2",
                 "d-shift-on-∂1", "hexagons-on-∂3", "single-curve")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    p: int | None = None
    q: int | None = None
    pmax: int | None = None
    suite: str = "all"
    fraction: str | None = None
    caps_delta: int = 3
    caps_wrap: int | None = None  # None: 3q
    disable: tuple[str, ...] = ()
    format: str = "json"
    out: str | None = None
    jobs: int = 1

    def validate(self):
        if self.command == "pattern" and (self.p is None or self.q is None):
            raise UsageError("pattern needs --p and --q")
        if self.pmax is not None and self.pmax < 2:
            raise UsageError(f"--pmax must be at least 2, got {self.pmax}")
        if self.command == "verify" and self.suite not in SUITES + ("all",):
            raise UsageError(f"unknown suite {self.suite}")
        if self.caps_delta < 1:
            raise UsageError("--caps-delta must be at least 1")
        if self.jobs < 1:
            raise UsageError("--jobs must be at least 1")
        if self.format not in ("json", "svg", "text"):
            raise UsageError(f"unknown format {self.format}")
        if self.format == "svg" and self.command != "pattern":
            raise UsageError("svg output is only available for pattern")

    def caps(self) -> SearchCaps:
        return SearchCaps(self.caps_delta, self.caps_wrap, frozenset(self.disable))


# -- reports ---------------------------------------------------------------

def _params(p, q) -> ConstructionParams:
    if p is None or q is None:
        raise UsageError("need both --p and --q")
    return ConstructionParams(p, q)


def pattern_report(params: ConstructionParams) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": "pattern",
            **pattern_to_dict(generate_pattern(params), params)}


def _battery_part(params: ConstructionParams, names) -> dict:
    bat = construction_battery(params)
    checks = [c for c in bat["checks"] if (c["name"] in REMARK_CHECKS) == (names == "remark")]
    return {"p": params.p, "q": params.q, "passed": all(c["passed"] for c in checks), "checks": checks}


def homology_entry(params: ConstructionParams) -> dict:
    w = [hom.winding_after_attachment(params, i) for i in (1, 2, 3)]
    expected = [params.p, params.q, params.q - params.p]
    rank, torsion = hom.sfs_presentation(params).abelianization()
    not_boundary = hom.check_not_isotopic_to_boundary(params)
    ok = w == expected and not_boundary and rank == 1 and not torsion
    return {
        "p": params.p, "q": params.q, "passed": ok,
        "windings": w, "expected": expected,
        "presentation": str(hom.sfs_presentation(params)),
        "abelianization": {"rank": rank, "torsion": list(torsion)},
        "not_isotopic_to_boundary": not_boundary,
    }


def easy_signature(rep: dict, p: int) -> dict:
    detail = rep["tally_detail"]
    chord = f"b1R-d{p - 1}R"
    return {
        "arcs_in_E_required_chord": any(chord in r for r in detail.get(pr.ARCS_IN_E, {})),
        "label_sequence_parallel_to_3": any("∂3" in r for r in detail.get(pr.LABEL_SEQUENCE, {})),
    }


def search_entry(args) -> dict:
    p, q, caps, suite = args
    params = ConstructionParams(p, q)
    rep = search(params, caps).to_dict()
    ok = rep["verdict"] == "all candidates refuted"
    if suite == "easy-case":
        rep["signature"] = easy_signature(rep, p)
        ok = ok and all(rep["signature"].values())
    else:
        c3 = rep["case3"]
        ok = ok and c3["shapes"] == c3["endpoints_of_epsilon_fired"]
    return {"passed": ok, **rep}


def suite_pairs(suite: str, bound: int) -> list[ConstructionParams]:
    if suite in ("remark", "census", "homology"):
        return coprime_pairs(bound)
    if suite == "easy-case":
        return [ConstructionParams(p, p + 1) for p in range(2, bound + 1)]
    pairs = [ConstructionParams(p, q) for p in range(2, bound + 1)
             for q in (2 * p - 1, 2 * p + 1) if q > 3]
    return sorted(pairs)


def run_suite(suite: str, cfg: RunConfig, pool=None) -> dict:
    bound = cfg.pmax if cfg.pmax is not None else DEFAULT_BOUND[suite]
    pairs = suite_pairs(suite, bound)
    caps = cfg.caps()
    if suite in ("remark", "census"):
        results = [_battery_part(pp, suite) for pp in pairs]
    elif suite == "homology":
        results = [homology_entry(pp) for pp in pairs]
    else:
        for pp in pairs:
            caps.resolved(pp)  # fail fast on bad caps
        jobs = [(pp.p, pp.q, caps, suite) for pp in pairs]
        results = list(pool.map(search_entry, jobs)) if pool else [search_entry(j) for j in jobs]
    results.sort(key=lambda r: (r["p"], r["q"]))
    out = {"bound": bound, "pairs": len(results), "passed": all(r["passed"] for r in results),
           "results": results}
    if suite in ("easy-case", "hard-case"):
        out["caps"] = {"max_delta": caps.max_delta,
                       "max_eps_r": "3q" if caps.max_eps_r is None else caps.max_eps_r,
                       "disabled": sorted(caps.disabled)}
    return out


def verify_report(cfg: RunConfig) -> dict:
    suites = SUITES if cfg.suite == "all" else (cfg.suite,)
    pool = ProcessPoolExecutor(cfg.jobs) if cfg.jobs > 1 else None
    try:
        body = {s: run_suite(s, cfg, pool) for s in suites}
    finally:
        if pool:
            pool.shutdown()
    return {"schema_version": SCHEMA_VERSION, "command": "verify", "suite": cfg.suite,
            "passed": all(b["passed"] for b in body.values()), "suites": body}


def twobridge_report(text: str) -> dict:
    try:
        f = TwoBridgeFraction.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    nf = normalize(f)
    rep = {"schema_version": SCHEMA_VERSION, "command": "twobridge",
           "fraction": str(f), "normal_form": str(nf), "mirror": str(mirror(f)),
           "nontrivial": is_nontrivial(f), "hyperbolic": is_hyperbolic(f)}
    if not rep["nontrivial"]:
        rep["refused"] = "the unknot has no tangle exterior checks"
        rep["rs_conditions"] = None
        return rep
    rep["m_bar"] = m_bar(nf)
    rep["rs_conditions"] = [v.to_dict() for v in rs_table(nf)]
    return rep


def homology_report(cfg: RunConfig) -> dict:
    if cfg.p is not None or cfg.q is not None:
        pairs = [_params(cfg.p, cfg.q)]
    else:
        pairs = coprime_pairs(cfg.pmax if cfg.pmax is not None else DEFAULT_BOUND["homology"])
    results = [homology_entry(pp) for pp in pairs]
    return {"schema_version": SCHEMA_VERSION, "command": "homology",
            "passed": all(r["passed"] for r in results), "results": results}


# -- output ----------------------------------------------------------------

def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _text(report: dict) -> str:
    lines = [f"{report['command']}"]
    if report["command"] == "verify":
        for name, s in report["suites"].items():
            lines.append(f"{name}: {'PASS' if s['passed'] else 'FAIL'} ({s['pairs']} pairs, bound {s['bound']})")
            for r in s["results"]:
                if not r["passed"] or name in ("easy-case", "hard-case"):
                    extra = f" {r['verdict']}" if "verdict" in r else ""
                    lines.append(f"  ({r['p']},{r['q']}) {'pass' if r['passed'] else 'FAIL'}{extra}")
    elif report["command"] == "twobridge":
        for k in ("fraction", "normal_form", "mirror", "nontrivial", "hyperbolic"):
            lines.append(f"{k}: {report[k]}")
        for v in report["rs_conditions"] or []:
            lines.append(f"({v['r']},{v['s']}) {v['status']}: {v['rule']}")
        if "refused" in report:
            lines.append(f"refused: {report['refused']}")
    elif report["command"] == "homology":
        for r in report["results"]:
            lines.append(f"({r['p']},{r['q']}) windings {r['windings']} {r['presentation']}"
                         f" {'pass' if r['passed'] else 'FAIL'}")
    else:
        lines.append(f"p={report['p']} q={report['q']} q_bar={report['q_bar']} p_bar={report['p_bar']}")
        for side in "PR":
            lines.append(f"{side}: " + " ".join(a["label"] for a in report[side]["arcs"]))
        lines.append("∂E: " + " ".join(report["curve"]))
    return "\n".join(lines) + "\n"


def _default_name(cfg: RunConfig) -> str:
    ext = {"json": "json", "svg": "svg", "text": "txt"}[cfg.format]
    if cfg.command == "pattern":
        return f"pattern-p{cfg.p}-q{cfg.q}.{ext}"
    if cfg.command == "verify":
        return f"verify-{cfg.suite}.{ext}"
    if cfg.command == "twobridge":
        return f"twobridge-{cfg.fraction.replace('/', '_')}.{ext}"
    return f"homology.{ext}"


def emit(cfg: RunConfig, payload: str):
    target = cfg.out
    if target is None and os.environ.get(OUT_DIR_ENV):
        target = str(Path(os.environ[OUT_DIR_ENV]) / _default_name(cfg))
    if target is None:
        sys.stdout.write(payload)
        return
    path = Path(target)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(payload, encoding="utf-8")
    print(f"wrote {path}", file=sys.stderr)


# -- argument handling -----------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hbknots", description="Knots in genus two handlebodies: "
                                 "arc patterns and combinatorial checks.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON file with default values for any flag")
    common.add_argument("--format", choices=("json", "svg", "text"), default=None)
    common.add_argument("--out", default=None, help="output file (default stdout)")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("pattern", parents=[common], help="dump or draw the arc pattern on P and R")
    s.add_argument("--p", type=int)
    s.add_argument("--q", type=int)

    s = sub.add_parser("verify", parents=[common], help="run verification suites")
    s.add_argument("--suite", choices=SUITES + ("all",))
    s.add_argument("--pmax", type=int, help="sweep bound (largest q, or largest p for searches)")
    s.add_argument("--caps-delta", type=int, help="maximum number of Δ components (default 3)")
    s.add_argument("--caps-wrap", type=int, help="maximum R arcs crossed by ε (default 3q)")
    s.add_argument("--disable", action="append", choices=pr.PREDICATES,
                   help="switch off a predicate (ablation); repeatable")
    s.add_argument("--jobs", type=int, help="worker processes for the searches")

    s = sub.add_parser("twobridge", parents=[common], help="two-bridge fraction checks")
    s.add_argument("fraction", help="m/n")

    s = sub.add_parser("homology", parents=[common], help="windings and presentations")
    s.add_argument("--p", type=int)
    s.add_argument("--q", type=int)
    s.add_argument("--pmax", type=int)
    return ap


def load_config(path: str | None) -> dict:
    if not path:
        return {}
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise UsageError("config file must hold a JSON object")
    known = {f.name for f in fields(RunConfig)}
    data = {k.replace("-", "_"): v for k, v in data.items()}
    unknown = set(data) - known
    if unknown:
        raise UsageError(f"unknown config keys {sorted(unknown)}")
    return data


def make_config(ns: argparse.Namespace) -> RunConfig:
    merged = load_config(ns.config)
    merged.pop("command", None)
    for f in fields(RunConfig):
        if f.name == "command":
            continue
        v = getattr(ns, f.name, None)
        if v is not None:
            merged[f.name] = v
    if "disable" in merged:
        merged["disable"] = tuple(merged["disable"])
    cfg = RunConfig(command=ns.command, **merged)
    cfg.validate()
    return cfg


def run(cfg: RunConfig) -> tuple[dict, int]:
    if cfg.command == "pattern":
        report = pattern_report(_params(cfg.p, cfg.q))
        return report, EXIT_OK
    if cfg.command == "verify":
        report = verify_report(cfg)
    elif cfg.command == "twobridge":
        return twobridge_report(cfg.fraction), EXIT_OK
    else:
        report = homology_report(cfg)
    return report, EXIT_OK if report["passed"] else EXIT_FAIL


def main(argv=None) -> int:
    ap = build_parser()
    ns = ap.parse_args(argv)
    try:
        cfg = make_config(ns)
        report, code = run(cfg)
    except (UsageError, ParameterError, CapsError) as exc:
        print(f"hbknots: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.format == "svg":
        params = ConstructionParams(cfg.p, cfg.q)
        payload = render(generate_pattern(params), params)
    elif cfg.format == "text":
        payload = _text(report)
    else:
        payload = dumps(report)
    emit(cfg, payload)
    return code


def config_dict(cfg: RunConfig) -> dict:
    """Flags of a config as a JSON object accepted by ``--config``."""
    d = asdict(cfg)
    d["disable"] = list(d["disable"])
    return d


if __name__ == "__main__":
    sys.exit(main())
