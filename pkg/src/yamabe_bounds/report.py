"""Rendering of results as plain dicts, canonical JSON, CSV and text."""
from __future__ import annotations

import csv
import enum
import io
import json
import math

from .bounds import BoundResult
from .squeeze import SqueezeEvaluation
from .tables import Ingredient, SigmaBound, Table1Row, TnRow, floor_to

SIGNIFICANT_DIGITS = 12


def _round_float(x: float):
    if not math.isfinite(x):
        return None
    return float(f"{x:.{SIGNIFICANT_DIGITS}g}")


def canonicalize(obj):
    """Recursively round floats to 12 significant digits and stringify enums."""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, float):
        return _round_float(obj)
    if isinstance(obj, int):
        return obj
    if isinstance(obj, dict):
        return {str(k): canonicalize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [canonicalize(v) for v in obj]
    return obj


def canonical_json(obj) -> str:
    """Deterministic JSON: sorted keys, fixed float precision, ASCII only.

    Parsing the output and feeding it back through this function gives the
    same bytes.
    """
    return json.dumps(canonicalize(obj), sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def bound_dict(result: BoundResult, gamma_source: str | None = None) -> dict:
    d = {
        "value": result.value,
        "ratio": result.ratio,
        "minimizer_c": result.minimizer_c,
        "formula": result.formula,
        "tolerance": result.tolerance,
        "evaluations": result.evaluations,
    }
    if result.params is not None:
        d.update(v=result.params.v, w=result.params.w, n=result.params.n, k=result.params.k)
    if result.gamma is not None:
        d["gamma"] = result.gamma
    if gamma_source is not None:
        d["gamma_source"] = gamma_source
    return d


def ingredient_dict(ing: Ingredient) -> dict:
    d = {"name": ing.name, "value": ing.value, "kind": ing.kind, "source": ing.source}
    if ing.bound is not None:
        d["bound"] = bound_dict(ing.bound)
    if ing.lambda2_reduction is not None:
        d["lambda2_reduction"] = ing.lambda2_reduction
    return d


def table1_dict(row: Table1Row) -> dict:
    return {
        "v": row.params.v,
        "w": row.params.w,
        "n": row.params.n,
        "k": row.params.k,
        "gamma": row.gamma.gamma,
        "gamma_source": row.gamma.source,
        "table_gamma": row.table_gamma,
        "mu1": row.mu1,
        "analytic": bound_dict(row.analytic),
        "numeric": bound_dict(row.numeric),
        "combined": bound_dict(row.combined),
        "analytic_reported": row.analytic_reported,
        "numeric_reported": row.numeric_reported,
    }


def sigma_dict(sb: SigmaBound) -> dict:
    return {
        "dimension": sb.dimension,
        "hypothesis": sb.hypothesis,
        "value": sb.value,
        "reported": floor_to(sb.value, 1),
        "claimed": sb.claimed,
        "relation": ">" if sb.strict else ">=",
        "meets_claim": sb.meets_claim(),
        "binding": sb.binding().name,
        "caveat": sb.caveat,
        "ingredients": [ingredient_dict(i) for i in sb.ingredients],
    }


def tn_dict(row: TnRow) -> dict:
    return {
        "n": row.n,
        "t_n": row.t_n,
        "t_n_reported": row.t_n_reported,
        "status": row.status,
        "source": row.source,
        "sphere_sigma": row.sphere_sigma,
        "sphere_sigma_reported": row.sphere_sigma_reported,
        "ingredients": [ingredient_dict(i) for i in row.ingredients],
    }


def squeeze_dict(ev: SqueezeEvaluation, v: int, c: float) -> dict:
    return {"v": v, "c": c, "r": ev.r, "f": ev.f_of_r, "f_prime": ev.f_prime,
            "quad_error": ev.quad_error}


# ---------------------------------------------------------------------------
# CSV


def _cell(x):
    if isinstance(x, float):
        return "" if not math.isfinite(x) else format(x, f".{SIGNIFICANT_DIGITS}g")
    if isinstance(x, enum.Enum):
        return x.value
    if x is None:
        return ""
    return str(x)


def to_csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, delimiter=",", lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(x) for x in row])
    return buf.getvalue()


TABLE1_CSV_HEADER = (
    "v", "w", "n", "k", "gamma", "table_gamma", "analytic", "numeric", "mu1",
    "analytic_value", "analytic_formula", "analytic_minimizer_c",
    "numeric_value", "numeric_minimizer_c", "combined_value", "gamma_source",
)


def table1_csv(rows) -> str:
    return to_csv(TABLE1_CSV_HEADER, [
        (r.params.v, r.params.w, r.params.n, r.params.k, r.gamma.gamma, r.table_gamma,
         r.analytic_reported, r.numeric_reported, r.mu1,
         r.analytic.value, r.analytic.formula, r.analytic.minimizer_c,
         r.numeric.value, r.numeric.minimizer_c, r.combined.value, r.gamma.source)
        for r in rows
    ])


def tn_csv(rows) -> str:
    return to_csv(
        ("n", "t_n", "status", "sphere_sigma", "t_n_value", "sphere_sigma_value", "source"),
        [(r.n, r.t_n_reported, r.status, r.sphere_sigma_reported, r.t_n, r.sphere_sigma,
          r.source) for r in rows],
    )


def sigma_csv(bounds) -> str:
    return to_csv(
        ("dimension", "hypothesis", "reported", "relation", "claimed", "meets_claim",
         "value", "binding", "caveat"),
        [(s.dimension, s.hypothesis, floor_to(s.value, 1), ">" if s.strict else ">=",
          s.claimed, s.meets_claim(), s.value, s.binding().name, s.caveat) for s in bounds],
    )


# ---------------------------------------------------------------------------
# text


def table1_text(rows) -> str:
    lines = [
        f"{'(v,w)':<8}{'(n,k)':<9}{'mu0/mu1':<9}{'Analytic':>9}{'Numeric':>9}{'mu1':>9}",
        "-" * 53,
    ]
    for r in rows:
        lines.append(
            f"{f'({r.params.v},{r.params.w})':<8}{f'({r.params.n},{r.params.k})':<9}"
            f"{r.table_gamma:<9g}{r.analytic_reported:>9.1f}{r.numeric_reported:>9.1f}"
            f"{r.mu1:>9.2f}"
        )
    lines.append("")
    lines.append("Lower bounds are rounded down; mu1 = mu(S^n) is approximate.")
    for r in rows:
        lines.append(
            f"  ({r.params.v},{r.params.w}): analytic {r.analytic.formula} at c={r.analytic.minimizer_c:.6f}; "
            f"numeric general bound at c={r.numeric.minimizer_c:.6f}; gamma: {r.gamma.source}"
        )
    return "\n".join(lines) + "\n"


def tn_text(rows) -> str:
    cells = [("n=", "sigma(M) >= t_n =", "sigma(S^n) =")]
    for r in rows:
        t = "?" if r.t_n is None else f"{r.t_n_reported:.1f}"
        cells.append((str(r.n), t, f"{r.sphere_sigma_reported:.1f}"))
    label_width = max(len(s) for s in cells[0])
    col_width = max(6, max(len(s) for col in cells[1:] for s in col))
    lines = []
    for i in range(3):
        parts = [cells[0][i].ljust(label_width)] + [col[i].rjust(col_width) for col in cells[1:]]
        lines.append(" ".join(parts))
    lines.append("")
    lines.append("Values rounded down.  External rows:")
    for r in rows:
        if r.status != "computed":
            lines.append(f"  n={r.n}: {r.status}, {r.source}")
    return "\n".join(lines) + "\n"


def sigma_text(bounds) -> str:
    lines = []
    for s in bounds:
        rel = ">" if s.strict else ">="
        status = "ok" if s.meets_claim() else "FAILS"
        lines.append(
            f"n={s.dimension:<3} {s.hypothesis.value:<32} sigma(M) >= {floor_to(s.value, 1):.1f} "
            f"(claim {rel} {s.claimed}: {status})"
        )
        for ing in s.ingredients:
            mark = "*" if ing is s.binding() else " "
            lines.append(f"   {mark} {ing.name:<30} {ing.value:12.4f}  [{ing.kind}] {ing.source}")
        if s.caveat:
            lines.append(f"     caveat: {s.caveat}")
    return "\n".join(lines) + "\n"


def bound_text(d: dict) -> str:
    keys = ("v", "w", "n", "k", "formula", "gamma", "gamma_source", "value", "ratio",
            "minimizer_c", "tolerance", "mu1", "evaluations")
    lines = []
    for key in keys:
        if key in d:
            val = d[key]
            if isinstance(val, float):
                val = f"{val:.12g}"
            elif isinstance(val, enum.Enum):
                val = val.value
            lines.append(f"{key:<13} {val}")
    return "\n".join(lines) + "\n"


def squeeze_text(d: dict) -> str:
    return "".join(f"{k:<11} {d[k]:.12g}\n" if isinstance(d[k], float) else f"{k:<11} {d[k]}\n"
                   for k in ("v", "c", "r", "f", "f_prime", "quad_error"))
