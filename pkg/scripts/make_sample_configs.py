"""Write the sample configuration files under configs/."""

import argparse
import random
from pathlib import Path

from cayley_octads.geometry.chirality import octad_signs
from cayley_octads.geometry.points import mirror, write_config
from cayley_octads.geometry.sampling import CUBE, SamplerConfig, perturbed_cube, wall_octad


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=Path(__file__).resolve().parent.parent / "configs", type=Path)
    ap.add_argument("--seed", type=int, default=SamplerConfig.seed)
    args = ap.parse_args()
    args.out.mkdir(exist_ok=True)
    cfg = SamplerConfig(seed=args.seed)
    rng = random.Random(cfg.seed)

    write_config(args.out / "cube.cfg", CUBE, "vertices of the cube (+-1, +-1, +-1, 1)")
    write_config(args.out / "cube-seven.cfg", CUBE[:7], "cube without (-1, -1, -1, 1)")
    octad = perturbed_cube(rng, cfg)
    sign, _ = octad_signs(octad)
    write_config(args.out / "cube-perturbed.cfg", octad,
                 f"regular octad near the cube, seed {cfg.seed}\ncommon residual sign {sign:+d}")
    write_config(args.out / "cube-perturbed-mirror.cfg", mirror(octad), "mirror image of cube-perturbed.cfg (x0 -> -x0)")
    write_config(args.out / "cube-perturbed-seven.cfg", octad[:7], "cube-perturbed.cfg without its last point")
    write_config(args.out / "wall.cfg", wall_octad(rng, cfg), "two coplanar quadruples: planes x2 = x3 and x2 = -x3")
    write_config(args.out / "six.cfg", octad[:6], "first six points of cube-perturbed.cfg")
    for f in sorted(args.out.glob("*.cfg")):
        print(f)


if __name__ == "__main__":
    main()
