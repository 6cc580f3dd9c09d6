"""Load the review corpus from CSV into validated records grouped per product."""

from __future__ import annotations

import logging
from collections import Counter
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import pandas as pd
from pydantic import ValidationError

from .config import ColumnMapping
from .errors import CorpusLoadError
from .schemas import Corpus, CorpusStats, LoadReport, ReviewRecord, STAR_VALUES

logger = logging.getLogger(__name__)


def load_csv(path: str | Path, schema: Optional[ColumnMapping] = None) -> Corpus:
    """
    Read a review CSV into a :class:`Corpus`.

    Rows with blank review text are dropped; rows whose product name, rating
    or vote count cannot be parsed are dropped and tallied. Blank vote cells
    become 0. Invalid UTF-8 bytes are replaced rather than rejected.
    """
    columns = schema or ColumnMapping()
    frame, unparsable = _read_frame(Path(path))

    missing = [col for col in columns.required() if col not in frame.columns]
    if missing:
        raise CorpusLoadError(f"Review file '{path}' is missing column '{missing[0]}'")

    products: Dict[str, List[ReviewRecord]] = {}
    dropped_empty = 0
    dropped_malformed = unparsable

    for row_number, row in enumerate(frame.to_dict("records"), start=2):
        short = [col for col in columns.required() if not isinstance(row[col], str)]
        if short:
            dropped_malformed += 1
            logger.debug("Skipping row %d: no value for '%s'", row_number, short[0])
            continue
        text = row[columns.reviews]
        if not text.strip():
            dropped_empty += 1
            continue
        try:
            record = _to_record(row, columns)
        except (ValueError, ValidationError) as exc:
            dropped_malformed += 1
            logger.debug("Skipping row %d: %s", row_number, exc)
            continue
        products.setdefault(record.product_name, []).append(record)

    kept = sum(len(records) for records in products.values())
    report = LoadReport(
        rows_read=len(frame) + unparsable,
        kept=kept,
        dropped_empty=dropped_empty,
        dropped_malformed=dropped_malformed,
    )
    logger.info(
        "Loaded %d reviews for %d products from %s (%d empty, %d malformed rows dropped)",
        kept,
        len(products),
        path,
        dropped_empty,
        dropped_malformed,
    )
    return Corpus(products=products, report=report)


def corpus_stats(corpus: Corpus) -> CorpusStats:
    votes = Counter(record.review_votes for record in corpus.records())
    ratings = Counter(record.overall_rating for record in corpus.records())
    return CorpusStats(
        product_count=len(corpus.products),
        review_count=corpus.review_count,
        vote_histogram=dict(sorted(votes.items())),
        rating_histogram={star: ratings.get(star, 0) for star in STAR_VALUES},
    )


def _read_frame(path: Path) -> Tuple[pd.DataFrame, int]:
    """Read every cell as text; rows with extra fields are skipped and counted."""
    bad_lines: List[List[str]] = []

    def skip_bad_line(fields: List[str]) -> None:
        bad_lines.append(fields)
        logger.debug("Skipping row with %d fields: %s", len(fields), fields[:1])
        return None

    try:
        frame = pd.read_csv(
            path,
            dtype=str,
            keep_default_na=False,
            encoding="utf-8",
            encoding_errors="replace",
            quotechar='"',
            engine="python",
            on_bad_lines=skip_bad_line,
        )
    except pd.errors.EmptyDataError as exc:
        raise CorpusLoadError(f"Review file '{path}' has no header row") from exc
    except (OSError, pd.errors.ParserError) as exc:
        raise CorpusLoadError(f"Could not read review file '{path}': {exc}") from exc
    return frame, len(bad_lines)


def _to_record(row: Dict[str, Any], columns: ColumnMapping) -> ReviewRecord:
    return ReviewRecord(
        product_name=row[columns.product],
        brand_name=_optional_text(row, columns.brand),
        price=_optional_price(row, columns.price),
        overall_rating=_whole_number(row[columns.rating], "rating"),
        review_text=row[columns.reviews],
        review_votes=_whole_number(row[columns.votes], "votes", blank=0),
    )


def _whole_number(value: str, label: str, blank: Optional[int] = None) -> int:
    value = value.strip()
    if not value:
        if blank is None:
            raise ValueError(f"{label} is blank")
        return blank
    number = float(value.replace(",", ""))
    if not number.is_integer():
        raise ValueError(f"{label} '{value}' is not a whole number")
    return int(number)


def _optional_text(row: Dict[str, Any], column: Optional[str]) -> Optional[str]:
    if column is None:
        return None
    value = row[column].strip()
    return value or None


def _optional_price(row: Dict[str, Any], column: Optional[str]) -> Optional[float]:
    if column is None:
        return None
    value = row[column].strip().lstrip("$").replace(",", "")
    try:
        return float(value) if value else None
    except ValueError:
        return None
