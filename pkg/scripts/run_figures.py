"""Regenerate figure data from the shipped configs.

    python scripts/run_figures.py                 # every config
    python scripts/run_figures.py fig3 fig6       # selected ones
    python scripts/run_figures.py --out results --threads 4 fig9

Each config names its own command; output lands in <out>/<figure>/.
"""
import argparse
import configparser
import sys
import time
from pathlib import Path

from qdshuttle.cli import main as cli_main

CONFIG_DIR = Path(__file__).resolve().parent.parent / "configs"


def command_for(cfg: Path) -> str:
    cp = configparser.ConfigParser(interpolation=None)
    cp.read(cfg, encoding="utf-8")
    return cp.get("run", "command")


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("figures", nargs="*", help="config stems, e.g. fig3 (default: all)")
    ap.add_argument("--out", default="results")
    ap.add_argument("--threads", type=int, default=None)
    args = ap.parse_args(argv)
    available = {p.stem: p for p in sorted(CONFIG_DIR.glob("*.cfg"))}
    names = args.figures or sorted(available, key=lambda s: int(s[3:].rstrip("ab")))
    unknown = [n for n in names if n not in available]
    if unknown:
        print(f"unknown figure(s) {unknown}; available: {', '.join(available)}", file=sys.stderr)
        return 2
    worst = 0
    for name in names:
        cfg = available[name]
        argv = [command_for(cfg), "--config", str(cfg), "--out", str(Path(args.out) / name)]
        if args.threads:
            argv += ["--threads", str(args.threads)]
        t0 = time.perf_counter()
        print(f"== {name}: qdshuttle {' '.join(argv)}", flush=True)
        rc = cli_main(argv)
        print(f"== {name}: exit {rc} after {time.perf_counter() - t0:.0f} s", flush=True)
        worst = max(worst, rc)
    return worst


if __name__ == "__main__":
    sys.exit(main())
