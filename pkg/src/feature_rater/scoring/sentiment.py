"""
Lexicon-and-heuristics sentence sentiment.

A sentence's raw valence is the sum of its word and emoticon valences after
all-caps emphasis, booster words, negation and exclamation emphasis are
applied. The raw sum is squashed into a compound score in [-1, 1] and then
bucketed into a 1-5 star sentence rating.
"""

from __future__ import annotations

import logging
import math
import re
from bisect import bisect_right
from importlib import resources
from pathlib import Path
from typing import Dict, FrozenSet, Iterable, Optional, Tuple

from ..config import BOOSTERS_FILE, NEGATORS_FILE, SENTIMENT_LEXICON_FILE, bundled_file
from ..errors import ContractViolation, LexiconError
from ..schemas import HeuristicConfig, Sentence, SentenceScore, SentimentLexicon

logger = logging.getLogger(__name__)

# Left-closed, right-open star intervals; the last one is closed at 1.0.
STAR_CUTS: Tuple[float, ...] = (-0.6, -0.2, 0.2, 0.6)

_WORD_ENTRY = re.compile(r"[A-Za-z][A-Za-z'-]*")


def load_sentiment_lexicon(
    valences: str | Path | None = None,
    boosters: str | Path | None = None,
    negators: str | Path | None = None,
) -> SentimentLexicon:
    """
    Build a :class:`SentimentLexicon` from word-list files.

    ``valences`` is tab separated (token, mean valence, ignored columns...).
    Booster files hold one token per line, optionally followed by ``-1`` for
    dampeners such as "barely"; negator files hold one token per line. Any
    file left out comes from the data directory when present there, else from
    the lexicon and word lists packaged with vaderSentiment.
    """
    valence_source = _pick(valences, SENTIMENT_LEXICON_FILE)
    if valence_source is None:
        valence_text = resources.files("vaderSentiment").joinpath("vader_lexicon.txt").read_text(
            encoding="utf-8"
        )
        origin = "vaderSentiment"
    else:
        valence_text = _read(valence_source, "sentiment lexicon")
        origin = str(valence_source)
    words, emoticons = _parse_valences(valence_text.splitlines(), origin)

    booster_source = _pick(boosters, BOOSTERS_FILE)
    booster_map = (
        _parse_boosters(_read(booster_source, "booster list").splitlines(), str(booster_source))
        if booster_source is not None
        else _vader_boosters()
    )
    negator_source = _pick(negators, NEGATORS_FILE)
    negator_set = (
        _word_list(_read(negator_source, "negator list").splitlines())
        if negator_source is not None
        else _vader_negators()
    )

    logger.info(
        "Sentiment lexicon: %d words, %d emoticons, %d boosters, %d negators (from %s)",
        len(words),
        len(emoticons),
        len(booster_map),
        len(negator_set),
        origin,
    )
    return SentimentLexicon(
        valences=words,
        boosters=booster_map,
        negators=negator_set,
        emoticon_valences=emoticons,
    )


def _pick(path: str | Path | None, bundled_name: str) -> Optional[Path]:
    return Path(path) if path is not None else bundled_file(bundled_name)


def _read(path: Path, label: str) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except OSError as exc:
        raise LexiconError(f"Could not read {label} '{path}': {exc}") from exc


def _parse_valences(
    lines: Iterable[str], origin: str
) -> Tuple[Dict[str, float], Dict[str, float]]:
    words: Dict[str, float] = {}
    emoticons: Dict[str, float] = {}
    for line_number, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) < 2:
            raise LexiconError(f"{origin}:{line_number}: expected 'token<TAB>valence'")
        token = parts[0].strip()
        try:
            valence = float(parts[1])
        except ValueError as exc:
            raise LexiconError(f"{origin}:{line_number}: bad valence '{parts[1]}'") from exc
        if _WORD_ENTRY.fullmatch(token):
            words[token.lower()] = valence
        else:
            emoticons[token] = valence
    return words, emoticons


def _parse_boosters(lines: Iterable[str], origin: str) -> Dict[str, float]:
    boosters: Dict[str, float] = {}
    for line_number, line in enumerate(lines, start=1):
        parts = line.split()
        if not parts or parts[0].startswith("#"):
            continue
        direction = 1.0
        if len(parts) > 1:
            try:
                direction = math.copysign(1.0, float(parts[1]))
            except ValueError as exc:
                raise LexiconError(
                    f"{origin}:{line_number}: bad booster sign '{parts[1]}'"
                ) from exc
        boosters[parts[0].lower()] = direction
    return boosters


def _word_list(lines: Iterable[str]) -> FrozenSet[str]:
    return frozenset(
        line.strip().lower() for line in lines if line.strip() and not line.startswith("#")
    )


def _vader_boosters() -> Dict[str, float]:
    from vaderSentiment.vaderSentiment import BOOSTER_DICT

    return {
        word.lower(): math.copysign(1.0, increment)
        for word, increment in BOOSTER_DICT.items()
        if " " not in word
    }


def _vader_negators() -> FrozenSet[str]:
    from vaderSentiment.vaderSentiment import NEGATE

    return frozenset(word.lower() for word in NEGATE)


def _negates(word: str, lex: SentimentLexicon) -> bool:
    return word in lex.negators or word.endswith("n't")


def raw_valence_sum(
    sentence: Sentence, lex: SentimentLexicon, cfg: Optional[HeuristicConfig] = None
) -> float:
    cfg = cfg or HeuristicConfig()
    tokens = sentence.tokens
    words = [token for token in tokens if token.kind == "word"]
    mixed_caps = any(t.allcaps for t in words) and not all(t.allcaps for t in words)

    total = 0.0
    for i, token in enumerate(tokens):
        if token.kind == "emoticon":
            total += lex.emoticon_valences.get(token.text, 0.0)
            continue
        if token.kind != "word" or token.text in lex.boosters:
            continue
        valence = lex.valences.get(token.text, 0.0)
        if not valence:
            continue
        sign = math.copysign(1.0, valence)
        if mixed_caps and token.allcaps:
            valence += sign * cfg.allcaps_increment

        nearest_first = tokens[max(0, i - len(cfg.booster_decay)) : i][::-1]
        for decay, previous in zip(cfg.booster_decay, nearest_first):
            direction = lex.boosters.get(previous.text) if previous.kind == "word" else None
            if not direction:
                continue
            scalar = direction * cfg.booster_increment
            if mixed_caps and previous.allcaps:
                scalar += math.copysign(cfg.allcaps_increment, scalar)
            valence += sign * scalar * decay

        window = tokens[max(0, i - cfg.negation_window) : i] if cfg.negation_window else []
        if any(prev.kind == "word" and _negates(prev.text, lex) for prev in window):
            valence *= cfg.negation_scalar
        total += valence

    marks = min(sentence.exclamations, cfg.exclamation_cap)
    if total > 0:
        total += marks * cfg.exclamation_increment
    elif total < 0:
        total -= marks * cfg.exclamation_increment
    return total


def compound(raw: float, cfg: Optional[HeuristicConfig] = None) -> float:
    """``raw / sqrt(raw**2 + alpha)``, clamped to [-1, 1]."""
    cfg = cfg or HeuristicConfig()
    if not math.isfinite(raw):
        raise ContractViolation(f"raw valence must be finite, got {raw}")
    score = raw / math.hypot(raw, math.sqrt(cfg.normalization_alpha))
    return max(-1.0, min(1.0, score))


def bucket(score: float) -> int:
    """Star rating for a compound score, using left-closed intervals."""
    if not -1.0 <= score <= 1.0:
        raise ContractViolation(f"compound score {score} lies outside [-1, 1]")
    return bisect_right(STAR_CUTS, score) + 1


def score_sentence(
    sentence: Sentence, lex: SentimentLexicon, cfg: Optional[HeuristicConfig] = None
) -> SentenceScore:
    value = compound(raw_valence_sum(sentence, lex, cfg), cfg)
    return SentenceScore(compound=value, stars=bucket(value))
