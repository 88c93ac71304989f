"""Environment stepping throughput and thread scaling.

Times 64 envs stepping with random actions; each step advances the
kinematics, checks collisions and casts the 360-ray scan used by the reward.
The 4-thread speedup depends on how many cores the machine gives us; the
report records the visible core count next to the ratio.
"""
import argparse
import csv

from navdistill.bench import measure_throughput

from _common import ARTIFACTS

parser = argparse.ArgumentParser(description=__doc__)
parser.add_argument("--steps", type=int, default=100)
parser.add_argument("--threads", type=int, nargs="+", default=[1, 2, 4])
args = parser.parse_args()

rows = measure_throughput(steps=args.steps, workers=tuple(args.threads))
cols = list(rows[0])
with open(ARTIFACTS / "throughput.csv", "w", newline="") as fh:
    w = csv.DictWriter(fh, cols)
    w.writeheader()
    w.writerows(rows)
for r in rows:
    print(f"{r['workers']} threads: {r['env_steps_per_s']:.0f} env-steps/s, {r['rays_per_s']:.3g} rays/s, "
          f"speedup {r['speedup']:.2f}x on {r['cpus']} visible core(s)")
