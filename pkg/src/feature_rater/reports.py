"""Render command results as CSV, JSON or text tables."""

from __future__ import annotations

import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence

import pandas as pd

from .schemas import (
    EvalReport,
    FeatureDistribution,
    FrequencyReport,
    KeywordElection,
    OutputFormat,
    ProductRank,
    ProductRatings,
    Recommendation,
    STAR_VALUES,
)


def _stars(value: float) -> str:
    return f"{value:.3f}"


def _csv(rows: List[Dict[str, Any]], columns: Sequence[str]) -> str:
    return pd.DataFrame(rows, columns=list(columns)).to_csv(index=False, lineterminator="\n")


def _json(payload: Any) -> str:
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def render_ratings(all_ratings: Mapping[str, ProductRatings], fmt: OutputFormat) -> str:
    if fmt == "json":
        return _json(
            {
                name: {
                    feature: {
                        "final": round(rating.final, 3),
                        "mention_count": rating.mention_count,
                        "weight_total": rating.weight_total,
                    }
                    for feature, rating in sorted(product.ratings.items())
                }
                for name, product in sorted(all_ratings.items())
            }
        )
    rows = [
        {
            "product": name,
            "feature": feature,
            "final": _stars(rating.final),
            "mention_count": rating.mention_count,
            "weight_total": rating.weight_total,
        }
        for name, product in sorted(all_ratings.items())
        for feature, rating in sorted(product.ratings.items())
    ]
    return _csv(rows, ["product", "feature", "final", "mention_count", "weight_total"])


def render_ranking(ranking: Sequence[ProductRank], fmt: OutputFormat) -> str:
    if fmt == "json":
        return _json([entry.model_dump() for entry in ranking])
    rows = [
        {
            "rank": entry.rank,
            "product": entry.product_name,
            "best_feature_count": entry.best_feature_count,
            "tiebreak_votes": entry.tiebreak_votes,
            "best_features": ";".join(entry.best_features),
        }
        for entry in ranking
    ]
    return _csv(rows, ["rank", "product", "best_feature_count", "tiebreak_votes", "best_features"])


def render_recommendation(recommendation: Recommendation, fmt: OutputFormat) -> str:
    payload = recommendation.model_dump()
    payload["rating"] = round(recommendation.rating, 3)
    if fmt == "json":
        return _json(payload)
    payload["rating"] = _stars(recommendation.rating)
    return _csv([payload], ["feature", "product_name", "rating", "rank"])


def render_frequency(
    report: FrequencyReport,
    fmt: OutputFormat,
    elections: Optional[Sequence[KeywordElection]] = None,
) -> str:
    if fmt == "json":
        payload: Dict[str, Any] = report.model_dump()
        if elections is not None:
            payload["elections"] = [
                {**election.model_dump(), "agrees": election.agrees} for election in elections
            ]
        return _json(payload)
    rows = [
        {
            "token": row.token,
            "count": row.count,
            "document_count": row.document_count,
            "fraction": f"{row.fraction:.6f}",
            "keyword": row.keyword or "",
        }
        for row in report.rows
    ]
    return _csv(rows, ["token", "count", "document_count", "fraction", "keyword"])


def render_distribution(distributions: Sequence[FeatureDistribution], fmt: OutputFormat) -> str:
    if fmt == "json":
        return _json(
            {
                item.feature: {"counts": item.counts, "rated_products": item.rated_products}
                for item in distributions
            }
        )
    star_columns = [f"{star}-star" for star in STAR_VALUES]
    rows = [
        {
            "feature": item.feature,
            **dict(zip(star_columns, item.counts)),
            "rated": item.rated_products,
        }
        for item in distributions
    ]
    return _csv(rows, ["feature", *star_columns, "rated"])


def render_eval(report: EvalReport, fmt: OutputFormat) -> str:
    if fmt == "json":
        payload = report.model_dump()
        for key in ("mse", "rmse", "mae", "exact_accuracy", "within_one_accuracy"):
            payload[key] = round(payload[key], 6)
        return _json(payload)
    return format_eval_table(report)


def format_eval_table(report: EvalReport) -> str:
    """Error metrics followed by the actual-vs-predicted star confusion matrix."""
    lines = [
        f"Evaluation of the '{report.feature}' feature over {report.n} products",
        "",
        f"{'Error Metrics':<14}| {'MSE':<6}| {'RMSE':<6}| {'MAE':<6}",
        f"{'Values':<14}| {report.mse:<6.3f}| {report.rmse:<6.3f}| {report.mae:<6.3f}",
        "",
        "Confusion matrix (rows = actual, columns = predicted)",
        f"{'':<8}" + "".join(f"{f'{star}-star':>8}" for star in STAR_VALUES),
    ]
    for star, row in zip(STAR_VALUES, report.confusion):
        lines.append(f"{f'{star}-star':<8}" + "".join(f"{count:>8}" for count in row))
    lines += [
        "",
        f"Exact accuracy:      {report.exact_accuracy:.1%}",
        f"Within-one accuracy: {report.within_one_accuracy:.1%}",
    ]
    return "\n".join(lines) + "\n"


def emit(text: str, out: Optional[Path]) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text, encoding="utf-8")
