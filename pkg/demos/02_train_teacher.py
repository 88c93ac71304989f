"""Train the privileged-LiDAR teacher at desk scale.

64 envs x 96 steps per epoch, 360 LiDAR rays, an 8 x 8 m arena with 10
obstacles of which 40% sit outside the scan plane.  The teacher reads the
privileged scan, where every obstacle is projected onto the scan plane, so
it can learn to avoid shelves and overhangs a plain 2D LiDAR would miss.

Equivalent CLI:  navdistill train-teacher --config configs/desk.cfg --seed 0
"""
import argparse
import shutil
from dataclasses import replace

from navdistill.config import load_config
from navdistill.ppo import train_teacher

from _common import ARTIFACTS, DESK_CFG, RUNS, progress_line

parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
parser.add_argument("--epochs", type=int, default=None, help="override the configured 300 epochs")
parser.add_argument("--seed", type=int, default=0)
args = parser.parse_args()

cfg = load_config(DESK_CFG)
ppo = replace(cfg.teacher, seed=args.seed, max_epochs=args.epochs or cfg.teacher.max_epochs)
out = RUNS / "teacher"
rows = train_teacher(ppo, cfg.world, out, progress_line)

best = max(rows, key=lambda r: (r["window_success"], r["epoch"]))
print(f"best trailing success {best['window_success']:.3f} at epoch {best['epoch']}")
for name, target in (("teacher_best.ckpt", "teacher_desk.ckpt"), ("train_log.csv", "teacher_desk_train_log.csv"),
                     ("train_manifest.txt", "teacher_desk_train_manifest.txt")):
    shutil.copy(out / name, ARTIFACTS / target)
print("checkpoint ->", ARTIFACTS / "teacher_desk.ckpt")
