#!/usr/bin/env python3
"""Bisect the brownian amplitude for seeded replication.

For a candidate linear amplitude a (angular amplitude a * ratio), runs the
seeded scenario on N rng seeds through `replisim sweep`, stopping each run at
the first complete daughter strand. The amplitude passes when at least
`--need` seeds produce the daughter inside the step budget.

Too little noise starves the seed of encounters; too much tears strands
apart. The search brackets the passing band from below: `--lo` must fail and
`--hi` must pass, and the script narrows the bracket to `--tol`. It then
reports the pass count at the bracket top and at each probe.
"""
import argparse
import csv
import pathlib
import subprocess
import sys
import tempfile


def pass_count(cli, amp, ratio, seeds, steps, bits, workdir):
    out = pathlib.Path(workdir) / f"amp_{amp:.6g}"
    cmd = [cli, "-q", "sweep", "--preset", "seeded_replication",
           "--steps", str(steps), "--seeds", str(seeds),
           "--stop-on", "StrandCompleted", "--stop-on-bits", bits,
           "-p", f"brownian_linear_amplitude={amp:.6g}",
           "-p", f"brownian_angular_amplitude={amp * ratio:.6g}",
           "-o", str(out)]
    subprocess.run(cmd, check=True)
    with open(out / "sweep_summary.csv", newline="") as f:
        row = next(csv.DictReader(f))
    return int(row["stopped"])


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--cli", default="build/tools/replisim")
    ap.add_argument("--lo", type=float, default=0.0)
    ap.add_argument("--hi", type=float, default=0.1)
    ap.add_argument("--ratio", type=float, default=0.5, help="angular / linear amplitude")
    ap.add_argument("--seeds", type=int, default=10)
    ap.add_argument("--need", type=int, default=8)
    ap.add_argument("--steps", type=int, default=200000)
    ap.add_argument("--bits", default="01100111")
    ap.add_argument("--tol", type=float, default=0.01)
    args = ap.parse_args()

    with tempfile.TemporaryDirectory() as work:
        def ok(a):
            n = pass_count(args.cli, a, args.ratio, args.seeds, args.steps, args.bits, work)
            print(f"amplitude {a:.6g}: {n}/{args.seeds}", flush=True)
            return n >= args.need

        lo, hi = args.lo, args.hi
        if not ok(hi):
            sys.exit(f"--hi {hi} does not pass; widen the bracket")
        while hi - lo > args.tol:
            mid = 0.5 * (lo + hi)
            if ok(mid):
                hi = mid
            else:
                lo = mid
    print(f"smallest passing amplitude within {args.tol}: {hi:.6g} "
          f"(angular {hi * args.ratio:.6g})")


if __name__ == "__main__":
    main()
