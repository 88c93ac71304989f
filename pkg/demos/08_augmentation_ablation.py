"""Does depth augmentation make the student robust to degraded depth?

Paired runs on a subset of the demonstration set: the same student seed is
trained once on clean depth and once on augmented depth.  Both are then
scored on the same held-out episodes with augmented depth.  Expected
direction: the clean-trained student fits its training data better but does
worse on augmented validation inputs.  Loss on clean validation inputs is
reported alongside, which separates slower fitting from a robustness gain.
Finished runs under runs/ablation are reused.
"""
import argparse
import csv

import numpy as np

from navdistill.augment import AugmentConfig
from navdistill.distill import BCConfig, DemoDataset, DemoWriter, bc_train, evaluate_bc
from navdistill.policy import StudentPolicy

from _common import ARTIFACTS, RUNS

parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
parser.add_argument("--dataset", default=str(RUNS / "distill" / "demos.bin"))
parser.add_argument("--episodes", type=int, default=200, help="episodes taken from the start of the dataset")
parser.add_argument("--epochs", type=int, default=3)
parser.add_argument("--seeds", type=int, nargs="+", default=[0, 1, 2])
args = parser.parse_args()

full = DemoDataset(args.dataset)
out = RUNS / "ablation"
out.mkdir(parents=True, exist_ok=True)
subset = out / f"subset_{args.episodes}.bin"
with DemoWriter(subset, full.n_cam, full.height, full.width, full.world_hash) as w:
    for e in range(min(args.episodes, full.n_episodes)):
        ep = full.episodes[e]
        w.add_episode(np.array(full.records[full.episode_slice(e)]), ep["goal"], ep["start_pose"], int(ep["outcome"]))
ds = DemoDataset(subset)
aug = AugmentConfig()

rows = []
for seed in args.seeds:
    cfg = BCConfig(epochs=args.epochs, seed=seed)
    seeds = np.random.SeedSequence(seed).spawn(3)
    _, val_idx = ds.split(cfg.val_fraction, int(seeds[1].generate_state(1)[0]))
    for label, train_aug in (("clean", None), ("augmented", aug)):
        run = out / f"{label}_seed{seed}_e{args.epochs}"
        if (run / "student_last.ckpt").exists():
            with open(run / "bc_log.csv", newline="") as fh:
                log = [{k: float(v) for k, v in r.items()} for r in csv.DictReader(fh)]
        else:
            log = bc_train(ds, train_aug, cfg, run)
        last = StudentPolicy.load(run / "student_last.ckpt")
        val_aug = evaluate_bc(last, ds, val_idx, aug, seed=12345)
        val_clean = evaluate_bc(last, ds, val_idx, None, seed=12345)
        rows.append({"seed": seed, "training": label, "epochs": args.epochs, "episodes": ds.n_episodes,
                     "final_train_loss": log[-1]["train_loss"], "val_loss_augmented": val_aug,
                     "val_loss_clean": val_clean})
        print(f"seed {seed} {label:9s} train {log[-1]['train_loss']:.5f}  val(augmented) {val_aug:.5f}  "
              f"val(clean) {val_clean:.5f}", flush=True)

with open(ARTIFACTS / f"augmentation_ablation_e{args.epochs}.csv", "w", newline="") as fh:
    w = csv.DictWriter(fh, list(rows[0]))
    w.writeheader()
    w.writerows(rows)

for seed in args.seeds:
    c, a = [r for r in rows if r["seed"] == seed]
    print(f"seed {seed}: clean-trained has lower train loss: {c['final_train_loss'] < a['final_train_loss']}; "
          f"higher augmented val loss: {c['val_loss_augmented'] > a['val_loss_augmented']}")
