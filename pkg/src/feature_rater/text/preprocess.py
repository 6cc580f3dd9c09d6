from __future__ import annotations

import re
from functools import lru_cache
from pathlib import Path
from typing import FrozenSet, List, Optional

from nltk.tokenize import WhitespaceTokenizer

from ..config import EMOTICONS_FILE, bundled_file
from ..errors import LexiconError
from ..schemas import CleanComment, FeatureLexicon, ReviewRecord, SpellDictionary, Token
from .spelling import spell_correct

# Letters, punctuation and the emoticon alphabet (which includes the digits 8 and 3).
_DISCARD = re.compile(r"[^A-Za-z.,:;!?' ()=*83$><^/\[\]#{}|\\&-]")
_ANY_SPACE = re.compile(r"\s")
_SPACE_RUN = re.compile(r" {2,}")

# Retained non-letters that split off the edges of a chunk; 8 and 3 stay in words.
_PUNCT = frozenset(".,:;-!?'()=*$><^/[]#{}|\\&")
_CLOSERS = ".!?,"

_whitespace = WhitespaceTokenizer()


def retain_useful_chars(raw: str) -> str:
    """Drop every character outside the retained alphabet and squeeze spaces."""
    text = _ANY_SPACE.sub(" ", raw)
    text = _DISCARD.sub("", text)
    return _SPACE_RUN.sub(" ", text).strip()


def load_emoticons(path: str | Path | None = None) -> FrozenSet[str]:
    if path is None:
        return _bundled_emoticons()
    return _read_emoticons(Path(path))


@lru_cache(maxsize=1)
def _bundled_emoticons() -> FrozenSet[str]:
    source = bundled_file(EMOTICONS_FILE)
    if source is None:
        raise LexiconError("No bundled emoticon list found")
    return _read_emoticons(source)


def _read_emoticons(source: Path) -> FrozenSet[str]:
    try:
        lines = source.read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise LexiconError(f"Could not read emoticon list '{source}': {exc}") from exc
    return frozenset(
        line.strip() for line in lines if line.strip() and not line.lstrip().startswith("# ")
    )


def tokenize(cleaned: str, emoticons: Optional[FrozenSet[str]] = None) -> List[Token]:
    """
    Split character-retained text into word, punctuation and emoticon tokens.

    Chunks are whitespace separated. A chunk listed as an emoticon is one
    token (also when closing marks such as ``.`` or ``!`` follow it);
    otherwise punctuation at either edge is split off one character at a
    time while interior apostrophes and hyphens stay in the word.
    """
    marks = emoticons if emoticons is not None else load_emoticons()
    tokens: List[Token] = []
    for chunk in _whitespace.tokenize(cleaned):
        if chunk in marks:
            tokens.append(Token(text=chunk, kind="emoticon"))
            continue
        body = chunk.rstrip(_CLOSERS)
        if body and body != chunk and body in marks:
            tokens.append(Token(text=body, kind="emoticon"))
            tokens.extend(_punctuation(chunk[len(body) :]))
            continue

        start, end = 0, len(chunk)
        while start < end and chunk[start] in _PUNCT:
            start += 1
        while end > start and chunk[end - 1] in _PUNCT:
            end -= 1
        tokens.extend(_punctuation(chunk[:start]))
        core = chunk[start:end]
        if core:
            if any(ch.isalpha() for ch in core):
                tokens.append(Token(text=core, kind="word", allcaps=core.isupper()))
            else:
                tokens.append(Token(text=core, kind="punctuation"))
        tokens.extend(_punctuation(chunk[end:]))
    return tokens


def _punctuation(chars: str) -> List[Token]:
    return [Token(text=ch, kind="punctuation") for ch in chars]


def correct_token(token: Token, lexicon: FeatureLexicon, dictionary: SpellDictionary) -> Token:
    """
    Lowercase a word token and rewrite it to its feature keyword or spelling.

    The raw word is checked against the lexicon before spell correction, so
    rare feature words such as "sd" or "otg" are never "corrected" away.
    """
    if token.kind != "word":
        return token
    lowered = token.text.lower()
    keyword = lexicon.resolve(lowered)
    if keyword is None:
        corrected = spell_correct(lowered, dictionary)
        keyword = lexicon.resolve(corrected)
        text = keyword or corrected
    else:
        text = keyword
    if text == token.text:
        return token
    return Token(text=text, kind="word", allcaps=token.allcaps)


def preprocess_comment(
    record: ReviewRecord,
    lexicon: FeatureLexicon,
    dictionary: SpellDictionary,
    emoticons: Optional[FrozenSet[str]] = None,
) -> Optional[CleanComment]:
    tokens = tokenize(retain_useful_chars(record.review_text), emoticons)
    if not tokens:
        return None
    return CleanComment(
        tokens=[correct_token(token, lexicon, dictionary) for token in tokens],
        votes=record.review_votes,
        source_rating=record.overall_rating,
    )
