"""Sample regular octads near the cube and tabulate chirality and oval counts.

    python3 scripts/octad_survey.py -n 30 --seed 7 --scale 1/8
"""

import argparse
import sys
import time
from fractions import Fraction

from cayley_octads.geometry.chirality import octad_signs
from cayley_octads.geometry.nets import conditioned_hessian, net_through
from cayley_octads.geometry.ovals import count_until_stable
from cayley_octads.geometry.points import mirror
from cayley_octads.geometry.sampling import SamplerConfig, sample_octads


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("-n", type=int, default=20)
    ap.add_argument("--seed", type=int, default=SamplerConfig.seed)
    ap.add_argument("--scale", type=Fraction, default=SamplerConfig.scale)
    ap.add_argument("--no-ovals", action="store_true", help="skip the (slow) oval counts")
    args = ap.parse_args(argv)
    cfg = SamplerConfig(seed=args.seed, scale=args.scale)

    print("i\tsign\tmirror_sign\tovals\tstabilized\tdepth\tseconds")
    bad = 0
    for i, octad in enumerate(sample_octads(args.n, cfg)):
        t0 = time.perf_counter()
        s, signs = octad_signs(octad)
        m, _ = octad_signs(mirror(octad))
        if args.no_ovals:
            count, stable, depth = "-", "-", "-"
        else:
            count, stable, depth = count_until_stable(conditioned_hessian(net_through(octad[:7])))
            bad += count != 4 or not stable
        print(f"{i}\t{s:+d}\t{m:+d}\t{count}\t{stable}\t{depth}\t{time.perf_counter() - t0:.2f}")
    print(f"# {bad} octads without a stable count of 4", file=sys.stderr)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
