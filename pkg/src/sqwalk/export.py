"""CSV and SVG output for metric series."""

from __future__ import annotations

import csv
import io
import math
import os
import tempfile
from pathlib import Path
from typing import Mapping, Sequence

import numpy as np

from .metrics import MetricSeries, normalize_series


def _fmt(x) -> str:
    if x is None or (isinstance(x, float) and math.isnan(x)):
        return ""
    return "%.17g" % x


def atomic_write(path: str | os.PathLike, data: str | bytes):
    """Write to a sibling temp file and rename it over ``path``."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    mode = "wb" if isinstance(data, bytes) else "w"
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, mode, **({} if mode == "wb" else {"newline": ""})) as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def table_to_csv(header: Sequence[str], rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([r if isinstance(r, str) else (str(r) if isinstance(r, (int, np.integer)) else _fmt(r))
                    for r in row])
    return buf.getvalue()


SERIES_COLUMNS = ("step", "coherence", "entropy", "normalized_coherence", "normalized_entropy")


def series_to_csv(series: MetricSeries) -> str:
    norm = normalize_series(series)
    rows = (
        (r.step, r.coherence, r.entropy, n.coherence, n.entropy)
        for r, n in zip(series.records, norm.records)
    )
    return table_to_csv(SERIES_COLUMNS, rows)


def write_series_csv(series: MetricSeries, path):
    atomic_write(path, series_to_csv(series))


def combined_csv(columns: Mapping[str, np.ndarray], steps: np.ndarray) -> str:
    header = ["step", *columns]
    rows = (
        (int(s), *(float(col[k]) for col in columns.values()))
        for k, s in enumerate(steps)
    )
    return table_to_csv(header, rows)


def read_csv(path) -> dict[str, np.ndarray]:
    """Columns of an emitted CSV as arrays; empty cells become NaN."""
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    header, body = rows[0], rows[1:]
    out = {}
    for k, name in enumerate(header):
        vals = [row[k] for row in body]
        if name == "step":
            out[name] = np.array([int(v) for v in vals], dtype=np.int64)
        else:
            out[name] = np.array([float(v) if v else np.nan for v in vals])
    return out


def write_svg(columns: Mapping[str, np.ndarray], steps: np.ndarray, path, ylabel: str, title: str = ""):
    """Line chart of each column against ``steps``, saved as SVG."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(7, 4.5))
    for label, y in columns.items():
        ax.plot(steps, y, lw=0.8, label=label)
    ax.set_xlabel("step")
    ax.set_ylabel(ylabel)
    if title:
        ax.set_title(title)
    ax.legend(frameon=False)
    fig.tight_layout()
    buf = io.StringIO()
    fig.savefig(buf, format="svg")
    plt.close(fig)
    atomic_write(path, buf.getvalue())
