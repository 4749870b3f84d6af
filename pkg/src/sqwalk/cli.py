"""Command-line runner and figure presets.

Single run::

    sqwalk --walk sqw --topology klein --d 100 --steps 1000

Figure preset (one combined CSV with a column per boundary condition)::

    sqwalk --preset fig-coherence --out-dir results/

Output goes to ``--out-dir``, else ``$SQWALK_OUTPUT_DIR``, else the working
directory.  A JSON file given with ``--config`` supplies defaults that
command-line flags override.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from . import export
from .evolution import DEFAULT_ORDER, NormDriftError, run_ctqw, run_rw, run_sqw
from .lattice import LatticeSpec, Scheme, Topology, parse_scheme, parse_topology
from .metrics import MetricSeries, normalize_series

OUTPUT_ENV = "SQWALK_OUTPUT_DIR"
WALKS = ("sqw", "ctqw", "rw")

# (steps, kappa_tau, sample_every) used when neither flag nor file sets them
WALK_DEFAULTS = {
    "sqw": (1000, math.pi / 3, 1),
    "ctqw": (1_600_000, 1e-4, 1000),
    "rw": (16_000, math.pi / 3, 1),
}

FIGURE_CURVES = (
    ("T2", Topology.TORUS, Scheme.AXIS_ALIGNED),
    ("KB", Topology.KLEIN_BOTTLE, Scheme.AXIS_ALIGNED),
    ("RP2", Topology.PROJECTIVE_PLANE, Scheme.AXIS_ALIGNED),
    ("T2p", Topology.TORUS, Scheme.INTERLEAVED),
    ("S2", Topology.SPHERE, Scheme.AXIS_ALIGNED),
)

# preset -> (walk, plotted quantity)
PRESETS = {
    "fig-coherence": ("sqw", "coherence"),
    "fig-entropy": ("sqw", "entropy"),
    "fig-ctqw": ("ctqw", "entropy"),
    "fig-rw": ("rw", "entropy"),
}


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    walk: str = "sqw"
    topology: Topology = Topology.TORUS
    scheme: Scheme = Scheme.AXIS_ALIGNED
    d: int = 100
    steps: int = 1000
    kappa_tau: float = math.pi / 3
    omega_tau: float = 2 * math.pi
    initial: Optional[int] = None  # None means the lattice center
    order: tuple[int, ...] = DEFAULT_ORDER
    record_distribution: bool = False
    sample_every: int = 1
    out_dir: Path = field(default_factory=Path)
    csv: Optional[Path] = None
    svg: Optional[Path] = None
    preset: Optional[str] = None
    jobs: int = 1

    @property
    def spec(self) -> LatticeSpec:
        return LatticeSpec(self.d, self.topology, self.scheme, self.omega_tau, self.kappa_tau)

    @property
    def csv_path(self) -> Path:
        if self.csv is not None:
            return self.csv
        name = self.preset or f"{self.walk}_{self.spec.label}_d{self.d}"
        return self.out_dir / f"{name}.csv"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sqwalk", description=__doc__.splitlines()[0])
    p.add_argument("--config", type=Path, help="JSON file with default option values")
    p.add_argument("--preset", choices=sorted(PRESETS))
    p.add_argument("--walk", choices=WALKS)
    p.add_argument("--topology", help="torus, klein, rp2 or sphere")
    p.add_argument("--scheme", help="axis or interleaved")
    p.add_argument("--d", type=int)
    p.add_argument("--steps", type=int)
    p.add_argument("--kappa-tau", type=float)
    p.add_argument("--omega-tau", type=float)
    p.add_argument("--initial", help="'center' or a 1-based site index")
    p.add_argument("--order", help="sub-step order, e.g. 1,3,2,4")
    p.add_argument("--record-distribution", action="store_true", default=None)
    p.add_argument("--sample-every", type=int)
    p.add_argument("--out-dir", type=Path)
    p.add_argument("--csv", type=Path, help="CSV output path")
    p.add_argument("--svg", nargs="?", const="auto", help="also write an SVG plot (optionally to this path)")
    p.add_argument("--jobs", type=int, help="parallel runs within a preset")
    p.add_argument("-q", "--quiet", action="store_true")
    return p


def _parse_initial(value) -> Optional[int]:
    if value is None or str(value).lower() == "center":
        return None
    try:
        return int(value)
    except ValueError:
        raise ConfigError(f"initial must be 'center' or a site index, got {value!r}") from None


def _parse_order(value) -> tuple[int, ...]:
    if isinstance(value, str):
        value = [v for v in value.replace(" ", "").split(",") if v]
    order = tuple(int(v) for v in value)
    if sorted(order) != [1, 2, 3, 4]:
        raise ConfigError(f"order must be a permutation of 1,2,3,4, got {value}")
    return order


def parse_config(argv: Optional[Sequence[str]] = None) -> RunConfig:
    """Merge defaults, the optional JSON config file and the flags (in that priority)."""
    args = build_parser().parse_args(argv)
    opts: dict = {}
    if args.config is not None:
        try:
            opts.update({k.replace("-", "_"): v for k, v in json.loads(args.config.read_text()).items()})
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config file {args.config}: {exc}") from exc
    for k, v in vars(args).items():
        if k not in ("config", "quiet") and v is not None:
            opts[k] = v

    unknown = set(opts) - set(RunConfig.__dataclass_fields__)
    if unknown:
        raise ConfigError(f"unknown option(s): {', '.join(sorted(unknown))}")

    preset = opts.get("preset")
    if preset is not None and preset not in PRESETS:
        raise ConfigError(f"unknown preset {preset!r}; choose from {', '.join(sorted(PRESETS))}")
    walk = PRESETS[preset][0] if preset else opts.get("walk", "sqw")
    if walk not in WALKS:
        raise ConfigError(f"unknown walk {walk!r}")
    steps, kappa_tau, sample_every = WALK_DEFAULTS[walk]

    out_dir = opts.get("out_dir") or os.environ.get(OUTPUT_ENV) or "."
    try:
        cfg = RunConfig(
            walk=walk,
            topology=parse_topology(opts.get("topology", Topology.TORUS)),
            scheme=parse_scheme(opts.get("scheme", Scheme.AXIS_ALIGNED)),
            d=int(opts.get("d", 100)),
            steps=int(opts.get("steps", steps)),
            kappa_tau=float(opts.get("kappa_tau", kappa_tau)),
            omega_tau=float(opts.get("omega_tau", 2 * math.pi)),
            initial=_parse_initial(opts.get("initial")),
            order=_parse_order(opts.get("order", DEFAULT_ORDER)),
            record_distribution=bool(opts.get("record_distribution", False)),
            sample_every=int(opts.get("sample_every", sample_every)),
            out_dir=Path(out_dir),
            csv=Path(opts["csv"]) if opts.get("csv") else None,
            svg=opts.get("svg"),
            preset=preset,
            jobs=int(opts.get("jobs", 1)),
        )
        spec = cfg.spec
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    if cfg.steps < 0:
        raise ConfigError("steps must be >= 0")
    if cfg.sample_every < 1:
        raise ConfigError("sample_every must be >= 1")
    if cfg.initial is not None and not 1 <= cfg.initial <= spec.n_sites:
        raise ConfigError(f"initial site {cfg.initial} outside 1..{spec.n_sites}")
    if cfg.svg == "auto":
        cfg.svg = cfg.csv_path.with_suffix(".svg")
    elif cfg.svg is not None:
        cfg.svg = Path(cfg.svg)
    return cfg


def simulate(cfg: RunConfig) -> MetricSeries:
    kw = dict(order=cfg.order, sample_every=cfg.sample_every, record_distribution=cfg.record_distribution)
    if cfg.walk == "sqw":
        return run_sqw(cfg.spec, cfg.steps, cfg.initial, **kw)
    if cfg.walk == "ctqw":
        return run_ctqw(cfg.spec, cfg.steps, cfg.initial, **kw)
    kw.pop("order")
    return run_rw(cfg.spec, cfg.steps, cfg.initial, **kw)


def _summary(series: MetricSeries, seconds: float) -> str:
    last = normalize_series(series).records[-1]
    raw = series.records[-1]
    parts = [f"{series.kind} {series.label} d={series.spec.d} step={raw.step}"]
    if raw.coherence is not None:
        parts.append(f"coherence={raw.coherence:.6g} ({last.coherence:.4f})")
    parts.append(f"entropy={raw.entropy:.6g} ({last.entropy:.4f})")
    parts.append(f"norm drift={series.max_norm_drift:.2e} time={seconds:.2f}s")
    return "  ".join(parts)


def _write_distributions(series: MetricSeries, path: Path):
    import io

    buf = io.BytesIO()
    np.savez_compressed(
        buf,
        steps=series.steps,
        distributions=np.array([r.distribution for r in series.records]),
    )
    export.atomic_write(path, buf.getvalue())


def run(cfg: RunConfig, echo=print) -> int:
    """Execute a single run or a preset; return a process exit code."""
    if cfg.preset:
        return run_preset(cfg, echo=echo)
    t0 = time.perf_counter()
    try:
        series = simulate(cfg)
    except NormDriftError as exc:
        echo(f"invariant violation: {exc}", file=sys.stderr)
        return 3
    elapsed = time.perf_counter() - t0
    try:
        export.write_series_csv(series, cfg.csv_path)
        if cfg.record_distribution:
            _write_distributions(series, cfg.csv_path.with_suffix(".npz"))
        if cfg.svg is not None:
            norm = normalize_series(series)
            cols = {"entropy": norm.entropy}
            if norm.has_coherence():
                cols = {"coherence": norm.coherence, **cols}
            export.write_svg(cols, norm.steps, cfg.svg, "normalized value", f"{series.kind} {series.label}")
    except OSError as exc:
        echo(f"cannot write output: {exc}", file=sys.stderr)
        return 2
    echo(_summary(series, elapsed))
    echo(f"wrote {cfg.csv_path}")
    return 0


def _preset_run(args) -> tuple[str, MetricSeries, float]:
    label, cfg = args
    t0 = time.perf_counter()
    return label, simulate(cfg), time.perf_counter() - t0


def preset_configs(cfg: RunConfig) -> list[tuple[str, RunConfig]]:
    out = []
    for label, topo, scheme in FIGURE_CURVES:
        sub = RunConfig(**{**cfg.__dict__, "topology": topo, "scheme": scheme, "preset": None,
                           "record_distribution": False, "csv": None, "svg": None})
        out.append((label, sub))
    return out


def preset_columns(name: str, results: dict[str, MetricSeries]) -> tuple[np.ndarray, dict[str, np.ndarray]]:
    _, quantity = PRESETS[name]
    steps = None
    cols = {}
    for label, series in results.items():
        norm = normalize_series(series)
        if steps is None:
            steps = norm.steps
        elif not np.array_equal(steps, norm.steps):
            raise RuntimeError("preset runs recorded different steps")
        cols[label] = norm.coherence if quantity == "coherence" else norm.entropy
    return steps, cols


def run_preset(cfg: RunConfig, echo=print) -> int:
    jobs = preset_configs(cfg)
    try:
        if cfg.jobs > 1:
            with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
                done = list(pool.map(_preset_run, jobs))
        else:
            done = [_preset_run(j) for j in jobs]
    except NormDriftError as exc:
        echo(f"invariant violation: {exc}", file=sys.stderr)
        return 3
    results = {}
    for label, series, seconds in done:
        echo(_summary(series, seconds))
        results[label] = series
    steps, cols = preset_columns(cfg.preset, results)
    try:
        export.atomic_write(cfg.csv_path, export.combined_csv(cols, steps))
        if cfg.svg is not None:
            quantity = PRESETS[cfg.preset][1]
            export.write_svg(cols, steps, cfg.svg, f"normalized {quantity}", cfg.preset)
    except OSError as exc:
        echo(f"cannot write output: {exc}", file=sys.stderr)
        return 2
    echo(f"wrote {cfg.csv_path}")
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    quiet = "-q" in (argv or sys.argv[1:]) or "--quiet" in (argv or sys.argv[1:])

    def echo(msg, file=None):
        if file is not None or not quiet:
            print(msg, file=file or sys.stdout)

    try:
        cfg = parse_config(argv)
    except ConfigError as exc:
        print(f"sqwalk: error: {exc}", file=sys.stderr)
        return 2
    return run(cfg, echo=echo)


if __name__ == "__main__":
    sys.exit(main())
