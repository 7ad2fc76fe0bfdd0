"""Report assembly, JSON/CSV serialisation and schema validation."""

from __future__ import annotations

import csv
import io
import json
from importlib import resources

from .bounds import motif_intervals
from .motifs import MOTIF_NAMES

__all__ = [
    "CSV_COLUMNS",
    "graph_stats",
    "estimate_rows",
    "to_json",
    "to_csv",
    "load_schema",
    "validate_report",
    "strip_timings",
]

CSV_COLUMNS = ["graph", "motif", "k", "seed", "estimate", "lo", "hi", "exact", "rel_err", "sampler"]


def graph_stats(g, W=None, Lambda=None, N1=None) -> dict:
    out = {
        "n": g.n,
        "m": g.m,
        "max_degree": int(g.degrees.max()) if g.n else 0,
        "self_loops_dropped": g.stats.self_loops,
        "duplicates_dropped": g.stats.duplicates,
    }
    if W is not None:
        out["W"] = W
    if Lambda is not None:
        out["Lambda"] = Lambda
        out["W_over_Lambda"] = (W / Lambda) if (W is not None and Lambda) else None
    if N1 is not None:
        out["N1"] = N1
    return out


def rel_err(estimate, exact):
    if exact is None or exact == 0:
        return None
    return abs(estimate - exact) / exact


def estimate_rows(est, delta: float, motifs, exact=None) -> list[dict]:
    """One row per motif from a single sampler run."""
    ivs = motif_intervals(est, delta)
    rows = []
    for i in motifs:
        iv = ivs[i]
        x = est.estimates[i]
        truth = None if exact is None else exact[i]
        rows.append({
            "motif": i,
            "name": MOTIF_NAMES[i],
            "sampler": est.sampler,
            "estimate": x,
            "count": est.counts.get(i),
            "scale": est.scales.get(i),
            "lo": iv.lower,
            "hi": iv.upper,
            "rel_half_width": (iv.upper - iv.lower) / 2 / abs(x) if x else None,
            "exact": truth,
            "rel_err": rel_err(x, truth),
        })
    return rows


def to_json(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def _cell(v):
    if v is None:
        return ""
    if isinstance(v, float):
        return repr(v)
    return v


def to_csv(rows, columns=CSV_COLUMNS) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=columns, extrasaction="ignore", lineterminator="\n")
    w.writeheader()
    for row in rows:
        w.writerow({c: _cell(row.get(c)) for c in columns})
    return buf.getvalue()


def load_schema() -> dict:
    text = resources.files("pathmotif").joinpath("report.schema.json").read_text()
    return json.loads(text)


def validate_report(report) -> None:
    """Raise ``jsonschema.ValidationError`` if ``report`` is malformed.

    Accepts a dict or a JSON string.
    """
    import jsonschema

    if isinstance(report, str):
        report = json.loads(report)
    jsonschema.validate(report, load_schema())


def strip_timings(report: dict) -> dict:
    return {k: v for k, v in report.items() if k != "timings"}
