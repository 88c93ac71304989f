"""Smoke test for the PPO teacher: goal seeking in an arena with no obstacles.

With nothing to avoid, the teacher only has to learn to drive to the goal and
stop inside the goal radius.  The trailing success rate over the last 256
episodes should pass 95% well inside 60 epochs.
"""
import argparse
import shutil

from navdistill.ppo import PPOConfig, train_teacher
from navdistill.world import WorldConfig

from _common import ARTIFACTS, RUNS, progress_line

parser = argparse.ArgumentParser(description=__doc__)
parser.add_argument("--epochs", type=int, default=60)
parser.add_argument("--seed", type=int, default=0)
args = parser.parse_args()

world = WorldConfig().with_(obstacle_min=0, obstacle_max=0)
out = RUNS / "empty"
rows = train_teacher(PPOConfig(max_epochs=args.epochs, seed=args.seed), world, out, progress_line)

hit = next((r["epoch"] for r in rows if r["window_success"] >= 0.95), None)
print(f"window success first >= 0.95 at epoch {hit}" if hit else "window success never reached 0.95")
shutil.copy(out / "teacher_best.ckpt", ARTIFACTS / "teacher_empty.ckpt")
shutil.copy(out / "train_log.csv", ARTIFACTS / "teacher_empty_train_log.csv")
print("checkpoint ->", ARTIFACTS / "teacher_empty.ckpt")
