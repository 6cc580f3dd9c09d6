from __future__ import annotations

import logging
import re
from pathlib import Path
from typing import Dict, FrozenSet, List, Optional

from nltk import FreqDist

from ..config import FEATURE_LEXICON_FILE, bundled_file
from ..errors import LexiconError
from ..schemas import (
    Corpus,
    FeatureLexicon,
    FeatureSet,
    FrequencyReport,
    FrequencyRow,
    KeywordElection,
)
from .preprocess import load_emoticons, retain_useful_chars, tokenize

logger = logging.getLogger(__name__)

_SEPARATORS = re.compile(r"[,\s]+")


def load_lexicon(path: str | Path | None = None) -> FeatureLexicon:
    """
    Read a feature lexicon file.

    One feature set per line, first token is the keyword, ``#`` starts a
    comment line and literal ``||`` separators are ignored. A token listed
    twice in one set is kept once; a token listed in two sets is an error.
    """
    source = Path(path) if path is not None else bundled_file(FEATURE_LEXICON_FILE)
    if source is None:
        raise LexiconError("No feature lexicon given and no bundled lexicon found")
    try:
        lines = source.read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise LexiconError(f"Could not read feature lexicon '{source}': {exc}") from exc

    sets: List[FeatureSet] = []
    member_index: Dict[str, int] = {}
    for line_number, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = [tok.lower() for tok in _SEPARATORS.split(stripped.replace("||", " ")) if tok]
        if not tokens:
            raise LexiconError(f"{source}:{line_number}: feature set is empty")

        keyword = tokens[0]
        members = list(dict.fromkeys(tokens))
        for member in members:
            if member in member_index:
                owner = sets[member_index[member]].keyword
                raise LexiconError(
                    f"{source}:{line_number}: token '{member}' is in both "
                    f"feature set '{owner}' and feature set '{keyword}'"
                )
            member_index[member] = len(sets)
        sets.append(FeatureSet(keyword=keyword, members=frozenset(members)))

    logger.info("Loaded %d feature sets (%d words) from %s", len(sets), len(member_index), source)
    return FeatureLexicon(sets=sets, member_index=member_index)


def resolve(lexicon: FeatureLexicon, token: str) -> Optional[str]:
    """Keyword of the feature set owning ``token``, or ``None`` for non-members."""
    return lexicon.resolve(token)


def frequency_table(
    corpus: Corpus,
    min_fraction: float,
    lexicon: Optional[FeatureLexicon] = None,
    emoticons: Optional[FrozenSet[str]] = None,
) -> FrequencyReport:
    """
    Count token occurrences over every review text.

    Text goes through character retention, tokenization and lowercasing
    only; no spell correction. Tokens counted fewer than
    ``min_fraction * review_count`` times are left out.
    """
    if not 0.0 <= min_fraction <= 1.0:
        raise ValueError(f"min_fraction must lie in [0, 1], got {min_fraction}")
    marks = emoticons if emoticons is not None else load_emoticons()

    occurrences: FreqDist = FreqDist()
    documents: FreqDist = FreqDist()
    review_count = 0
    for record in corpus.records():
        review_count += 1
        cleaned = retain_useful_chars(record.review_text)
        tokens = [tok.text.lower() for tok in tokenize(cleaned, marks)]
        occurrences.update(tokens)
        documents.update(set(tokens))

    threshold = min_fraction * review_count
    rows = [
        FrequencyRow(
            token=token,
            count=count,
            document_count=documents[token],
            fraction=count / review_count,
            keyword=lexicon.resolve(token) if lexicon is not None else None,
        )
        for token, count in occurrences.items()
        if count >= threshold
    ]
    rows.sort(key=lambda row: (-row.count, row.token))
    return FrequencyReport(review_count=review_count, min_fraction=min_fraction, rows=rows)


def elect_keywords(lexicon: FeatureLexicon, report: FrequencyReport) -> List[KeywordElection]:
    """
    For each feature set, the member counted most often in ``report``.

    Ties go to the file keyword, then to the alphabetically first member.
    The lexicon itself is never changed.
    """
    counts = report.counts()
    elections: List[KeywordElection] = []
    for feature_set in lexicon.sets:
        elected = min(
            feature_set.members,
            key=lambda member: (
                -counts.get(member, 0),
                member != feature_set.keyword,
                member,
            ),
        )
        elections.append(
            KeywordElection(
                keyword=feature_set.keyword,
                elected=elected,
                keyword_count=counts.get(feature_set.keyword, 0),
                elected_count=counts.get(elected, 0),
            )
        )
    return elections
