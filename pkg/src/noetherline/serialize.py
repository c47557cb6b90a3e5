"""Plain-dict views of the records, plus CSV and text-table rendering.

Rationals are written as "p/q" strings so documents round-trip exactly.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .fibration import (
    FibrationType,
    RatioInterval,
    SingularityClass,
    invariants,
    vanishing_monomials,
)
from .moduli import DeltaProfile, ModuliSummary, StratumRecord
from .oracle import VerificationReport

STRATUM_COLUMNS = ("d0", "h0_branch", "dim_aut", "delta", "singularity", "status")
FAILURE_COLUMNS = ("d", "d0", "check", "expected", "actual")
NOT_APPLICABLE = "n/a: d < 5"


def rational(x: Fraction | int) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def interval_dict(iv: RatioInterval) -> dict:
    return {
        "lower": rational(iv.lower),
        "upper": rational(iv.upper),
        "lower_closed": iv.lower_closed,
        "upper_closed": iv.upper_closed,
    }


def singularity_dict(s: SingularityClass) -> dict:
    return {"kind": s.kind, "count": s.count, "ratio_interval": interval_dict(s.interval)}


def status_name(record: StratumRecord) -> str:
    return record.status.value if record.status is not None else NOT_APPLICABLE


def stratum_row(record: StratumRecord) -> dict:
    return {
        "d0": record.d0,
        "h0_branch": record.h0_branch,
        "dim_aut": record.dim_aut,
        "delta": record.delta,
        "singularity": record.singularity.kind,
        "status": status_name(record),
    }


def stratum_dict(record: StratumRecord) -> dict:
    f = FibrationType(record.d, record.d0)
    inv = invariants(f)
    return {
        "kind": "stratum",
        "d": record.d,
        "d0": record.d0,
        "e": f.e,
        "p_g": inv.p_g,
        "q": inv.q,
        "K3": inv.K3,
        "canonical_image": {"kind": record.image.kind, "parameter": record.image.parameter},
        "singularity": singularity_dict(record.singularity),
        "vanishing_monomials": [str(m) for m in vanishing_monomials(f)],
        "h0_branch": record.h0_branch,
        "dim_aut": record.dim_aut,
        "delta": record.delta,
        "status": status_name(record),
        "model": record.model.value,
        "canonical_model": record.model.is_canonical,
    }


def summary_dict(summary: ModuliSummary) -> dict:
    return {
        "kind": "moduli_summary",
        "p_g": summary.p_g,
        "d": summary.d,
        "nonempty": summary.nonempty,
        "stratum_count": summary.stratum_count,
        "undetermined_count": summary.undetermined_count,
        "components_upper": summary.components_upper,
        "components_lower": summary.components_lower,
        "dimension": summary.dimension,
        "argmax_d0": summary.argmax_d0,
        "strata": [stratum_dict(r) for r in summary.strata],
    }


def profile_dict(profile: DeltaProfile, rows: list[StratumRecord]) -> dict:
    return {
        "kind": "delta_profile",
        "d": profile.d,
        "segments": [
            {
                "interval": interval_dict(s.interval),
                "slope": s.slope,
                "d_coeff": s.d_coeff,
                "constant": s.constant,
            }
            for s in profile.segments
        ],
        "discontinuities": [
            {"breakpoint": rational(x), "gap": rational(g)} for x, g in profile.discontinuities
        ],
        "rows": [stratum_row(r) for r in rows],
    }


def report_dict(report: VerificationReport) -> dict:
    return {
        "kind": "verification_report",
        "d_min": report.d_min,
        "d_max": report.d_max,
        "checks_run": report.checks_run,
        "failure_count": len(report.failures),
        "failures": [
            {"d": f.d, "d0": f.d0, "check": f.check, "expected": f.expected, "actual": f.actual}
            for f in report.failures
        ],
    }


def to_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def to_csv(columns: tuple[str, ...], rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n", extrasaction="ignore")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def to_table(columns: tuple[str, ...], rows: list[dict]) -> str:
    cells = [list(columns)] + [[str(row[c]) for c in columns] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(columns))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def to_keyvalue(pairs: list[tuple[str, object]]) -> str:
    width = max(len(k) for k, _ in pairs)
    return "".join(f"{k.ljust(width)}  {v}\n" for k, v in pairs)
