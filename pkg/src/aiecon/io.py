"""File ingestion and emission: series/observation CSVs, result CSV/JSON/plot data,
and the JSON scenario document format."""

from __future__ import annotations

import csv
import dataclasses
import json
import os
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .calibration import CalibrationObservation, PhiACalibrationAssumptions
from .core import CountryProfile, EnhancementParams, NetworkParams
from .dynamics import AgentPath, GapCurve, LogisticParams
from .errors import DataError, ParseError
from .fitting import SeriesData
from .scenario import COLUMNS, ComparisonSeries, ScenarioConfig, SimulationResult

EMIT_FORMATS = ("csv", "json", "plotdata")
OUT_ENV = "AIECON_OUT"
FORMAT_VERSION = 1


@dataclass(frozen=True)
class RunManifest:
    source: str
    out_dir: Path
    formats: tuple = ("csv",)
    deterministic: bool = True

    def __post_init__(self):
        if not self.formats:
            raise DataError("at least one emit format is required")
        bad = [f for f in self.formats if f not in EMIT_FORMATS]
        if bad:
            raise DataError(f"unknown emit format(s) {bad}; choose from {EMIT_FORMATS}")
        object.__setattr__(self, "out_dir", Path(self.out_dir))


def default_out_dir():
    value = os.environ.get(OUT_ENV)
    return Path(value) if value else None


def parse_number(text: str) -> float:
    """Parse a decimal number, tolerating thousands separators ("56,612")."""
    return float(text.strip().replace(",", "").replace("_", ""))


def _read_table(path, required):
    path = Path(path)
    with path.open(newline="") as fh:
        rows = list(csv.reader(fh))
    rows = [(i, r) for i, r in enumerate(rows, start=1) if any(c.strip() for c in r)]
    if not rows:
        raise DataError(f"{path}: file is empty")
    line, header = rows[0]
    header = [h.strip().lower() for h in header]
    missing = [c for c in required if c not in header]
    if missing:
        raise ParseError(f"{path}: header must contain {', '.join(required)}", line)
    idx = [header.index(c) for c in required]
    out = []
    for line, row in rows[1:]:
        if len(row) != len(header):
            raise ParseError(f"{path}: expected {len(header)} fields, got {len(row)}", line)
        try:
            out.append((line, [parse_number(row[i]) for i in idx]))
        except ValueError:
            raise ParseError(f"{path}: malformed number in {row!r}", line) from None
    if not out:
        raise DataError(f"{path}: no data rows")
    return out


def ingest_series(path, label=None) -> SeriesData:
    """Read a ``t,value`` CSV into t-sorted :class:`SeriesData`."""
    rows = _read_table(path, ("t", "value"))
    seen = {}
    for line, (t, _) in rows:
        if t in seen:
            raise DataError(f"{path}: duplicate t={t:g} on lines {seen[t]} and {line}")
        seen[t] = line
    return SeriesData.from_points([v for _, v in rows], label=label or Path(path).stem)


def ingest_observations(path) -> list[CalibrationObservation]:
    """Read ``year,gdp,capital,population`` rows, sorted by year."""
    rows = _read_table(path, ("year", "gdp", "capital", "population"))
    obs = [CalibrationObservation(int(y), gdp, cap, pop) for _, (y, gdp, cap, pop) in rows]
    return sorted(obs, key=lambda o: o.year)


def load_assumptions(path) -> PhiACalibrationAssumptions:
    with Path(path).open() as fh:
        data = json.load(fh)
    try:
        return PhiACalibrationAssumptions(**{k: float(data[k]) for k in ("omega", "s", "delta", "agents")})
    except KeyError as exc:
        raise DataError(f"{path}: missing assumption {exc.args[0]!r}") from None


def _write_csv(path, header, rows):
    with path.open("w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([repr(float(x)) if not isinstance(x, (int, np.integer)) else int(x) for x in row])


def result_to_dict(result: SimulationResult) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "scenario": result.scenario,
        "model": result.model,
        "units": "nominal USD",
        "parameters": result.parameters,
        "records": [
            {c: (int(v) if c == "t" else v) for c, v in rec.items()} for rec in result.records()
        ],
    }


def result_from_dict(data: dict) -> SimulationResult:
    recs = data["records"]
    cols = {c: np.array([float(r[c]) for r in recs]) for c in COLUMNS}
    return SimulationResult(data["scenario"], int(data["model"]), dict(data["parameters"]), **cols)


def load_result(path) -> SimulationResult:
    with Path(path).open() as fh:
        return result_from_dict(json.load(fh))


def emit_result(result: SimulationResult, manifest: RunManifest) -> list[Path]:
    """Write the result in every requested format; return the paths written."""
    out = manifest.out_dir
    out.mkdir(parents=True, exist_ok=True)
    stem = result.scenario
    written = []
    if "csv" in manifest.formats:
        path = out / f"{stem}.csv"
        rows = zip(*(getattr(result, c) for c in COLUMNS))
        _write_csv(path, COLUMNS, ((int(r[0]),) + tuple(r[1:]) for r in rows))
        written.append(path)
    if "json" in manifest.formats:
        path = out / f"{stem}.json"
        doc = result_to_dict(result)
        doc["provenance"] = {"source": manifest.source, "deterministic": manifest.deterministic}
        path.write_text(json.dumps(doc, indent=2) + "\n")
        written.append(path)
    if "plotdata" in manifest.formats:
        path = out / f"{stem}.plot.csv"
        _write_csv(path, ("t", "y_total"), zip(result.t.astype(int), result.y_total))
        written.append(path)
    return written


def emit_comparison(cmp: ComparisonSeries, out_dir) -> Path:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    path = out / f"{cmp.a}_vs_{cmp.b}.plot.csv"
    _write_csv(path, ("t", "ratio", "enhancement_pct"), zip(cmp.t.astype(int), cmp.ratio, cmp.enhancement_pct))
    return path


# --- scenario documents ---------------------------------------------------

def profile_to_dict(profile: CountryProfile) -> dict:
    return dataclasses.asdict(profile)


def profile_from_dict(d: dict) -> CountryProfile:
    d = dict(d)
    d["enhancement"] = EnhancementParams(**d["enhancement"])
    d["network"] = NetworkParams(**d["network"])
    d["capability"] = LogisticParams(**d["capability"])
    d["agents"] = AgentPath(**d["agents"])
    return CountryProfile(**d)


def scenario_to_dict(cfg: ScenarioConfig) -> dict:
    return {
        "name": cfg.name,
        "model": cfg.model,
        "description": cfg.description,
        "horizon": cfg.horizon,
        "epoch_label": cfg.epoch_label,
        "profile": profile_to_dict(cfg.profile),
        "overrides": dict(cfg.overrides),
        "gap": dataclasses.asdict(cfg.gap) if cfg.gap is not None else None,
        "phi_a_frontier": cfg.phi_a_frontier,
    }


def scenario_from_dict(d: dict) -> ScenarioConfig:
    try:
        return ScenarioConfig(
            name=d["name"],
            model=int(d["model"]),
            profile=profile_from_dict(d["profile"]),
            horizon=int(d.get("horizon", 20)),
            epoch_label=d.get("epoch_label", "2019"),
            overrides=dict(d.get("overrides") or {}),
            gap=GapCurve(**d["gap"]) if d.get("gap") else None,
            phi_a_frontier=d.get("phi_a_frontier"),
            description=d.get("description", ""),
        )
    except (KeyError, TypeError) as exc:
        raise DataError(f"invalid scenario document: {exc}") from None


def dump_registry(registry: dict, path) -> Path:
    path = Path(path)
    doc = {"format_version": FORMAT_VERSION, "scenarios": [scenario_to_dict(c) for c in registry.values()]}
    path.write_text(json.dumps(doc, indent=2) + "\n")
    return path


def load_registry(path) -> dict[str, ScenarioConfig]:
    """Load a document written by :func:`dump_registry` or a single scenario object."""
    with Path(path).open() as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: {exc.msg}", exc.lineno) from None
    items = doc["scenarios"] if "scenarios" in doc else [doc]
    configs = [scenario_from_dict(d) for d in items]
    return {c.name: c for c in configs}
