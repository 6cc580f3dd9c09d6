from __future__ import annotations

from typing import FrozenSet, List

from ..schemas import CleanComment, FeatureLexicon, Sentence, Token

PERIOD_ONLY: FrozenSet[str] = frozenset({"."})
TERMINATORS: FrozenSet[str] = frozenset({".", "!", "?"})


def split_sentences(comment: CleanComment, strict: bool = False) -> List[Sentence]:
    """
    Group a comment's tokens into sentences.

    ``strict`` follows the period-only rule: a sentence must be closed by
    ``.`` and a trailing unclosed run is discarded. Otherwise ``.``, ``!``
    and ``?`` all close a sentence and the end of the comment closes the
    last one. Terminators are not part of the sentence tokens; runs of
    terminators yield no empty sentences.
    """
    stops = PERIOD_ONLY if strict else TERMINATORS
    sentences: List[Sentence] = []
    current: List[Token] = []
    closing: List[str] = []

    def flush() -> None:
        if current:
            sentences.append(
                Sentence(tokens=list(current), votes=comment.votes, terminators=tuple(closing))
            )
        current.clear()
        closing.clear()

    for token in comment.tokens:
        if token.kind == "punctuation" and token.text in stops:
            closing.append(token.text)
            continue
        if closing:
            flush()
        current.append(token)

    if closing or not strict:
        flush()
    return sentences


def relevant_sentences(sentences: List[Sentence], lexicon: FeatureLexicon) -> List[Sentence]:
    """Sentences naming at least one feature keyword, with ``features`` filled in."""
    relevant: List[Sentence] = []
    for sentence in sentences:
        features = frozenset(
            keyword
            for token in sentence.tokens
            if token.kind == "word" and (keyword := lexicon.resolve(token.text)) is not None
        )
        if features:
            relevant.append(sentence.model_copy(update={"features": features}))
    return relevant
