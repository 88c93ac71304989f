"""Collect teacher demonstrations and distill them into the depth student.

1. The teacher drives with the privileged scan and mean actions; every step
   also renders four clean 60 x 96 depth images around the robot.  Only
   successful episodes are kept.
2. Behaviour cloning: each epoch every stored panorama is degraded afresh by
   the seven-stage augmentation pipeline, and the student regresses the
   teacher's action from (depth, proprioception).

The student never sees LiDAR.  Where the teacher relied on the privileged
scan to avoid an overhang, the student has to find the same cue in depth.
"""
import argparse
import json
import shutil

from navdistill.config import load_config
from navdistill.distill import BCConfig, DemoDataset, bc_train, collect_demos
from navdistill.policy import TeacherPolicy
from navdistill.sensors import CameraRig

from _common import ARTIFACTS, DESK_CFG, RUNS

parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
parser.add_argument("--episodes", type=int, default=None, help="successful episodes to store (config: 2000)")
parser.add_argument("--epochs", type=int, default=None, help="behaviour cloning epochs (config: 100)")
parser.add_argument("--seed", type=int, default=0)
parser.add_argument("--skip-collection", action="store_true", help="reuse runs/distill/demos.bin")
args = parser.parse_args()

cfg = load_config(DESK_CFG)
s = cfg.student
out = RUNS / "distill"
out.mkdir(parents=True, exist_ok=True)
data = out / "demos.bin"
episodes = args.episodes or s.episodes



def report(stored, finished, successes):
    if stored % 100 == 0:
        print(f"{stored} stored ({successes}/{finished} teacher successes)", flush=True)


if not args.skip_collection:
    teacher = TeacherPolicy.load(ARTIFACTS / "teacher_desk.ckpt", n_scan=cfg.world.n_scan)
    info = collect_demos(teacher, cfg.world, episodes, data, seed=args.seed, n_env=s.collect_envs,
                         rig=CameraRig(width=s.width, height=s.height), progress=report)
    print("collection:", info)

ds = DemoDataset(data, expected_hash=cfg.world.with_(lidar_mode="privileged").digest())
stats = ds.stats()
print(f"{stats['records']} records in {stats['episodes']} episodes, mean length {stats['mean_episode_length']:.1f}")
(ARTIFACTS / "demo_stats.json").write_text(json.dumps(stats, indent=1) + "\n")

bc = BCConfig(lr=s.lr, batch=s.batch, epochs=args.epochs or s.epochs, val_fraction=s.val_fraction, seed=args.seed)
rows = bc_train(ds, cfg.augment, bc, out / "bc",
                progress=lambda r: print(f"epoch {r['epoch']:3d}  train {r['train_loss']:.5f}  "
                                         f"val {r['val_loss']:.5f}  ({r['seconds']:.0f}s)", flush=True))
best = min(rows, key=lambda r: r["val_loss"])
print(f"epoch-1 val {rows[0]['val_loss']:.5f}; best val {best['val_loss']:.5f} at epoch {best['epoch']}")
for name, target in (("student_best.ckpt", "student_desk.ckpt"), ("bc_log.csv", "student_desk_bc_log.csv"),
                     ("bc_manifest.txt", "student_desk_bc_manifest.txt")):
    shutil.copy(out / "bc" / name, ARTIFACTS / target)
