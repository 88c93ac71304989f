"""Top-down drawings of evaluation scenes and driven trajectories.

Renders one 20-obstacle scene with the paths of the standard-scan teacher,
the privileged-scan teacher and the student, plus a sheet of clean and
augmented depth panoramas.  Out-of-plane obstacles are hatched.
"""
import argparse

import numpy as np

from navdistill.augment import apply_pipeline
from navdistill.config import load_config
from navdistill.evaluate import eval_scenes, run_cell
from navdistill.policy import StudentPolicy, TeacherPolicy
from navdistill.render import write_svg
from navdistill.sensors import CameraRig, render_batch

from _common import ARTIFACTS, DESK_CFG

parser = argparse.ArgumentParser(description=__doc__)
parser.add_argument("--obstacles", type=int, default=20)
parser.add_argument("--scenes", type=int, default=3)
parser.add_argument("--seed", type=int, default=0)
args = parser.parse_args()

cfg = load_config(DESK_CFG)
out = ARTIFACTS / "gallery"
out.mkdir(parents=True, exist_ok=True)
rig = CameraRig(width=cfg.student.width, height=cfg.student.height)
n = args.obstacles
world = cfg.world.with_(obstacle_min=n, obstacle_max=n, out_of_plane_fraction=cfg.eval.out_of_plane_fraction)
scenes = eval_scenes(world, n, args.scenes, args.seed)
teacher = TeacherPolicy.load(ARTIFACTS / "teacher_desk.ckpt", n_scan=world.n_scan)
student = StudentPolicy.load(ARTIFACTS / "student_desk.ckpt", rig.height, rig.width)

for label, pol, mode, aug in (("teacher_std", teacher, "standard", None),
                              ("teacher_priv", teacher, "privileged", None),
                              ("student", student, None, cfg.augment)):
    w = world.with_(lidar_mode=mode or "standard")
    cell, logs = run_cell(pol, w, scenes, label, n, args.seed, mode, aug, rig, n_env=len(scenes),
                          trajectories=len(scenes))
    for k, tr in enumerate(logs):
        name = f"{label}_scene{k}.svg"
        outcome = ("running", "success", "collision", "timeout")[tr.outcome]
        write_svg(out / name, tr.scene, [p[:2] for p in tr.pose], title=f"{label}: {outcome}")
        print(name, outcome, f"{len(tr.t)} steps")

# clean vs augmented depth, four cameras side by side, rows = draws
clean = render_batch(np.array([scenes[0].start_pose]), scenes[0].table(), rig)[0]
rng = np.random.default_rng(args.seed)
sheet = np.concatenate([np.concatenate(list(clean), axis=1)] +
                       [np.concatenate(list(apply_pipeline(clean, cfg.augment, rng)), axis=1) for _ in range(3)])
g = np.clip(np.round(sheet / cfg.augment.max_depth * 255), 0, 255).astype(np.uint8)
(out / "depth_sheet.pgm").write_bytes(f"P5 {g.shape[1]} {g.shape[0]} 255\n".encode() + g.tobytes())
print("depth sheet ->", out / "depth_sheet.pgm")
