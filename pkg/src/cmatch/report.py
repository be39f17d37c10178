"""Summaries of search runs: a CSV table plus matplotlib figures.

Reads the JSONL records a search run produced and writes, into one output
directory, a flat summary.csv and three PNG charts (verdict counts, matching
values, work distribution).  Rendering uses the Agg backend so it works
headless.
"""

from __future__ import annotations

import csv
import json
import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .search import SearchError, VERDICTS

_CSV_COLUMNS = (
    "index",
    "verdict",
    "n",
    "t",
    "cm_lower",
    "cm_value",
    "cm_exact",
    "seed",
    "work",
    "reason",
)


def load_run(path: str) -> list[dict]:
    """Parse a search run's JSONL output."""
    records = []
    try:
        with open(path, "r", encoding="ascii") as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    records.append(json.loads(line))
                except json.JSONDecodeError as exc:
                    raise SearchError(f"{path}:{lineno}: bad record: {exc}") from exc
    except OSError as exc:
        raise SearchError(f"cannot read run {path!r}: {exc}") from exc
    return records


def write_summary_csv(records: list[dict], path: str) -> str:
    with open(path, "w", encoding="ascii", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(_CSV_COLUMNS)
        for rec in records:
            writer.writerow([rec.get(col) for col in _CSV_COLUMNS])
    return path


def _save_bar(counts: dict[str, int], path: str, title: str, xlabel: str) -> None:
    fig, ax = plt.subplots(figsize=(6, 4))
    labels = list(counts)
    ax.bar(range(len(labels)), [counts[k] for k in labels], color="tab:blue")
    ax.set_xticks(range(len(labels)))
    ax.set_xticklabels(labels, rotation=20, ha="right", fontsize=8)
    ax.set_title(title)
    ax.set_xlabel(xlabel)
    ax.set_ylabel("instances")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def _save_hist(values: list[int], path: str, title: str, xlabel: str) -> None:
    fig, ax = plt.subplots(figsize=(6, 4))
    if values:
        bins = min(30, max(1, len(set(values))))
        ax.hist(values, bins=bins, color="tab:green")
    else:
        ax.text(0.5, 0.5, "no data", ha="center", va="center")
    ax.set_title(title)
    ax.set_xlabel(xlabel)
    ax.set_ylabel("instances")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def render_figures(records: list[dict], out_dir: str) -> list[str]:
    """Write the three standard charts; returns the created paths."""
    os.makedirs(out_dir, exist_ok=True)
    paths = []

    verdict_counts = {v: 0 for v in VERDICTS}
    for rec in records:
        verdict_counts[rec["verdict"]] = verdict_counts.get(rec["verdict"], 0) + 1
    p = os.path.join(out_dir, "verdicts.png")
    _save_bar(verdict_counts, p, "Verdicts", "verdict")
    paths.append(p)

    cm_values = [
        rec["cm_value"] if rec.get("cm_value") is not None else rec.get("cm_lower")
        for rec in records
    ]
    cm_values = [v for v in cm_values if v is not None]
    p = os.path.join(out_dir, "cm_values.png")
    _save_hist(cm_values, p, "Connected matching values", "best known value")
    paths.append(p)

    works = [rec["work"] for rec in records if rec.get("work") is not None]
    p = os.path.join(out_dir, "work.png")
    _save_hist(works, p, "Work per instance", "work units")
    paths.append(p)
    return paths


def summarize_run(run_path: str, out_dir: str, csv_name: str = "summary.csv") -> dict:
    """Load a run and write CSV plus figures into out_dir."""
    records = load_run(run_path)
    os.makedirs(out_dir, exist_ok=True)
    csv_path = write_summary_csv(records, os.path.join(out_dir, csv_name))
    figures = render_figures(records, out_dir)
    counts: dict[str, int] = {}
    for rec in records:
        counts[rec["verdict"]] = counts.get(rec["verdict"], 0) + 1
    return {
        "records": len(records),
        "counts": counts,
        "csv": csv_path,
        "figures": figures,
    }
