"""Run every residual sweep and write per-check CSV files plus a JSON summary.

    python3 scripts/run_verification.py --out results/verification
    python3 scripts/run_verification.py --n-re 40 --n-im 40 --stride 11
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from bctk.sweeps import FUNCTIONAL_GRID, SCHEMA_VERSION, GridSpec, any_failed, resolve_tolerances, verify_all


@dataclass(frozen=True)
class VerificationConfig:
    out: Path = Path("results/verification")
    grid: GridSpec = GridSpec()
    series_samples: int = 200
    tol: float | None = None


def parse_args(argv: list[str] | None = None) -> VerificationConfig:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--out", type=Path, default=VerificationConfig.out)
    p.add_argument("--n-re", type=int, default=GridSpec.n_re)
    p.add_argument("--n-im", type=int, default=GridSpec.n_im)
    p.add_argument("--stride", type=int, default=GridSpec.stride)
    p.add_argument("--series-samples", type=int, default=200)
    p.add_argument("--tol", type=float, default=None, help="one tolerance for every check")
    a = p.parse_args(argv)
    grid = GridSpec(n_re=a.n_re, n_im=a.n_im, stride=a.stride)
    return VerificationConfig(a.out, grid, a.series_samples, a.tol)


def main(argv: list[str] | None = None) -> int:
    cfg = parse_args(argv)
    tols = resolve_tolerances(global_tol=cfg.tol)
    t0 = time.perf_counter()
    results = verify_all(tols, grid=cfg.grid, series_samples=cfg.series_samples)
    elapsed = time.perf_counter() - t0

    cfg.out.mkdir(parents=True, exist_ok=True)
    for name, res in results.items():
        (cfg.out / f"{name}.csv").write_text(res.to_csv())
    summary = {
        "schema_version": SCHEMA_VERSION,
        "grid": asdict(cfg.grid),
        "functional_grid": asdict(FUNCTIONAL_GRID),
        "seconds": round(elapsed, 3),
        "checks": [r.summary() for r in results.values()],
    }
    (cfg.out / "summary.json").write_text(json.dumps(summary, indent=2) + "\n")

    for r in results.values():
        flag = "ok" if r.passed else "FAIL"
        print(f"{r.name:<13} max {r.max_residual:10.3e}  mean {r.mean_residual:10.3e}  tol {r.tolerance:.0e}  n={len(r.rows):<4} {flag}")
    print(f"{elapsed:.2f}s, results in {cfg.out}")
    return 2 if any_failed(results) else 0


if __name__ == "__main__":
    sys.exit(main())
