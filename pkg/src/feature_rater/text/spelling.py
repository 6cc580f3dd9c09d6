"""Frequency-ranked edit-distance spell correction over a word-frequency list."""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Dict, Iterable, Set

from ..config import WORD_FREQUENCIES_FILE, bundled_file
from ..errors import LexiconError
from ..schemas import SpellDictionary

logger = logging.getLogger(__name__)

_LETTERS = "abcdefghijklmnopqrstuvwxyz"
_MIN_LENGTH = 3


def load_dictionary(path: str | Path | None = None) -> SpellDictionary:
    """
    Load a ``word count`` per line frequency list.

    Without a path the data directory's word_frequencies.txt is used, falling
    back to the English frequency list packaged with pyspellchecker.
    """
    source = Path(path) if path is not None else bundled_file(WORD_FREQUENCIES_FILE)
    if source is None:
        entries = _pyspellchecker_frequencies()
        logger.info("Loaded %d dictionary words from pyspellchecker", len(entries))
        return SpellDictionary(entries=entries)

    entries: Dict[str, int] = {}
    try:
        lines = source.read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise LexiconError(f"Could not read spell dictionary '{source}': {exc}") from exc
    for line_number, line in enumerate(lines, start=1):
        parts = line.split()
        if not parts:
            continue
        if len(parts) != 2 or not parts[1].isdigit():
            raise LexiconError(f"{source}:{line_number}: expected 'word count', got '{line}'")
        count = int(parts[1])
        if count > 0:
            word = parts[0].lower()
            entries[word] = entries.get(word, 0) + count
    logger.info("Loaded %d dictionary words from %s", len(entries), source)
    return SpellDictionary(entries=entries)


def _pyspellchecker_frequencies() -> Dict[str, int]:
    from spellchecker import SpellChecker

    frequencies = SpellChecker(language="en").word_frequency.dictionary
    return {word: int(count) for word, count in frequencies.items() if count > 0}


def spell_correct(word: str, dictionary: SpellDictionary) -> str:
    """
    Most frequent dictionary word within edit distance 1, else 2, else ``word``.

    Known words, words shorter than three letters and words containing
    digits are returned unchanged. Frequency ties go to the alphabetically
    first candidate. Results are memoised on the dictionary.
    """
    if word in dictionary or len(word) < _MIN_LENGTH or any(ch.isdigit() for ch in word):
        return word
    cached = dictionary.recall(word)
    if cached is not None:
        return cached

    entries = dictionary.entries
    first = _edits1(word)
    candidates = _known(first, entries)
    if not candidates:
        candidates = _known((e2 for e1 in first for e2 in _edits1(e1)), entries)
    correction = min(candidates, key=lambda w: (-entries[w], w)) if candidates else word
    dictionary.remember(word, correction)
    return correction


def _known(words: Iterable[str], entries: Dict[str, int]) -> Set[str]:
    return {w for w in words if w in entries}


def _edits1(word: str) -> Set[str]:
    splits = [(word[:i], word[i:]) for i in range(len(word) + 1)]
    deletes = [left + right[1:] for left, right in splits if right]
    transposes = [
        left + right[1] + right[0] + right[2:] for left, right in splits if len(right) > 1
    ]
    replaces = [left + c + right[1:] for left, right in splits if right for c in _LETTERS]
    inserts = [left + c + right for left, right in splits for c in _LETTERS]
    return set(deletes + transposes + replaces + inserts)


def load_cache(dictionary: SpellDictionary, path: Path) -> int:
    """Warm the dictionary's memo from a JSON cache file; missing files are ignored."""
    if not path.is_file():
        return 0
    try:
        corrections = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        logger.warning("Ignoring unreadable spell cache %s: %s", path, exc)
        return 0
    dictionary.warm({str(k): str(v) for k, v in corrections.items()})
    logger.info("Loaded %d cached spelling corrections from %s", len(corrections), path)
    return len(corrections)


def save_cache(dictionary: SpellDictionary, path: Path) -> int:
    memo = dictionary.memo()
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(memo, sort_keys=True, ensure_ascii=False), encoding="utf-8")
    logger.info("Saved %d spelling corrections to %s", len(memo), path)
    return len(memo)
