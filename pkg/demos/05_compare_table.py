"""The headline comparison: teacher (standard scan), teacher (privileged scan), student.

All three columns drive the identical 200 scenes per obstacle count
(10, 15, 20, 25), with 40% of obstacles outside the LiDAR plane.  The
standard-scan teacher collides with what it cannot see; the student, reading
degraded depth, should recover most of the privileged teacher's success.

Equivalent CLI:  navdistill compare --config configs/desk.cfg --seed 0
"""
import argparse

from navdistill.config import load_config
from navdistill.evaluate import compare_table
from navdistill.policy import StudentPolicy, TeacherPolicy
from navdistill.sensors import CameraRig

from _common import ARTIFACTS, DESK_CFG

parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
parser.add_argument("--episodes", type=int, default=None)
parser.add_argument("--counts", type=int, nargs="+", default=None)
parser.add_argument("--seed", type=int, default=0)
args = parser.parse_args()

cfg = load_config(DESK_CFG)
world = cfg.world.with_(out_of_plane_fraction=cfg.eval.out_of_plane_fraction)
tpath, spath = ARTIFACTS / "teacher_desk.ckpt", ARTIFACTS / "student_desk.ckpt"
teacher = TeacherPolicy.load(tpath, n_scan=world.n_scan)
student = StudentPolicy.load(spath, cfg.student.height, cfg.student.width)
rows = compare_table(teacher, student, world, tuple(args.counts or cfg.eval.counts),
                     args.episodes or cfg.eval.episodes, args.seed, ARTIFACTS / "compare", aug=cfg.augment,
                     rig=CameraRig(width=cfg.student.width, height=cfg.student.height), n_env=cfg.eval.n_env,
                     teacher_path=tpath, student_path=spath,
                     progress=lambda c: print(f"  {c.label:13s} {c.obstacles:3d} obstacles  "
                                              f"success {c.success_rate:.3f}", flush=True))
print(f"{'obstacles':>9s} {'std':>7s} {'priv':>7s} {'student':>8s}")
for r in rows:
    print(f"{r['obstacles']:9d} {r['teacher_std']:7.3f} {r['teacher_priv']:7.3f} {r['student']:8.3f}")
