"""Render verify results to a report directory: a CSV of per-game rows
plus matplotlib figures summarizing capture times."""
from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .verify import VerifyReport  # noqa: E402

CSV_FIELDS = [
    "instance",
    "seed",
    "n",
    "blocks",
    "exit_vertex",
    "copwin",
    "cops_won",
    "rounds",
    "violations",
    "passed",
]


def write_report(report: VerifyReport, outdir: str | Path) -> list[Path]:
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    csv_path = out / "results.csv"
    with csv_path.open("w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_FIELDS)
        writer.writeheader()
        for r in report.rows:
            writer.writerow(
                {
                    "instance": r.instance,
                    "seed": r.seed,
                    "n": r.n,
                    "blocks": r.blocks,
                    "exit_vertex": r.exit_vertex,
                    "copwin": int(r.copwin),
                    "cops_won": int(r.cops_won),
                    "rounds": r.rounds,
                    "violations": r.violations,
                    "passed": int(r.passed),
                }
            )
    written.append(csv_path)

    if report.rows:
        rounds = [r.rounds for r in report.rows]
        sizes = [r.n for r in report.rows]

        fig, ax = plt.subplots(figsize=(6, 4))
        ax.hist(rounds, bins=range(0, max(rounds) + 2), color="#4878cf", edgecolor="black")
        ax.set_xlabel("rounds to capture")
        ax.set_ylabel("games")
        ax.set_title("Capture time, strategy vs optimal robber")
        fig.tight_layout()
        p = out / "rounds_hist.png"
        fig.savefig(p, metadata={"Software": None})
        plt.close(fig)
        written.append(p)

        fig, ax = plt.subplots(figsize=(6, 4))
        ax.scatter(sizes, rounds, s=14, alpha=0.5, color="#d65f5f")
        bound = sorted(set(sizes))
        ax.plot(bound, [4 * n * n for n in bound], "k--", label="4|V|^2 bound")
        ax.set_xlabel("vertices")
        ax.set_ylabel("rounds to capture")
        ax.legend()
        fig.tight_layout()
        p = out / "rounds_vs_vertices.png"
        fig.savefig(p, metadata={"Software": None})
        plt.close(fig)
        written.append(p)

    return written
