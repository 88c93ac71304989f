"""Shared paths for the demo scripts."""
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
ARTIFACTS = ROOT / "artifacts"
RUNS = ROOT / "runs"
DESK_CFG = ROOT / "configs" / "desk.cfg"


def progress_line(row, win):
    print(f"epoch {row['epoch']:4d}  reward {row['mean_reward']:8.2f}  success {row['success_rate']:.2f}  "
          f"window {win:.3f}  lr {row['lr']:.2e}  ({row['seconds']:.1f}s)", flush=True)
