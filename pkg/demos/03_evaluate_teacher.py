"""Evaluate the desk teacher on 200 fresh 10-obstacle scenes.

The same scenes are driven twice: once with the privileged scan the teacher
was trained on and once with the standard scan, which cannot see obstacles
outside the LiDAR plane.  The gap between the two rows is the price of a
plain 2D LiDAR.
"""
import argparse

from navdistill.config import load_config
from navdistill.evaluate import evaluate_policy
from navdistill.policy import TeacherPolicy

from _common import ARTIFACTS, DESK_CFG

parser = argparse.ArgumentParser(description=__doc__)
parser.add_argument("--episodes", type=int, default=200)
parser.add_argument("--seed", type=int, default=0)
args = parser.parse_args()

cfg = load_config(DESK_CFG)
ckpt = ARTIFACTS / "teacher_desk.ckpt"
teacher = TeacherPolicy.load(ckpt, n_scan=cfg.world.n_scan)
for mode in ("privileged", "standard"):
    rep = evaluate_policy(teacher, cfg.world, (10,), args.episodes, args.seed, label=f"teacher_{mode}",
                          mode=mode, checkpoint=str(ckpt), trajectories=3)
    rep.write(ARTIFACTS / "teacher_eval", f"teacher_{mode}")
    c = rep.cells[0]
    lo, hi = c.success_ci()
    print(f"{mode:10s}  success {c.success_rate:.3f} [{lo:.3f}, {hi:.3f}]  collision {c.collision_rate:.3f}  "
          f"timeout {c.timeout_rate:.3f}  mean length {c.lengths.mean():.0f} steps")
