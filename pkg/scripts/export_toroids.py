"""Export toroid meshes of the bicomplex roots of unity as OBJ and JSON.

    python3 scripts/export_toroids.py --n 3 4 5 8 --out results/toroids
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from bctk.trig import toroid_mesh


def main(argv: list[str] | None = None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, nargs="+", default=[3, 4, 5])
    p.add_argument("--R", type=float, default=2.0, help="distance from the axis to the tube centre")
    p.add_argument("--r", type=float, default=1.0, help="tube radius")
    p.add_argument("--out", type=Path, default=Path("results/toroids"))
    args = p.parse_args(argv)

    args.out.mkdir(parents=True, exist_ok=True)
    for n in args.n:
        mesh = toroid_mesh(n, args.R, args.r)
        stem = args.out / f"toroid_n{n}"
        stem.with_suffix(".obj").write_text(mesh.to_obj())
        stem.with_suffix(".json").write_text(mesh.to_json() + "\n")
        v, e, f = len(mesh.vertices), len(mesh.edges), len(mesh.faces)
        print(f"n={n}: v={v} e={e} f={f} v-e+f={v - e + f} -> {stem}.obj")
    return 0


if __name__ == "__main__":
    sys.exit(main())
