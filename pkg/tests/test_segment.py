import random

import pytest

from feature_rater.schemas import CleanComment, Sentence, Token
from feature_rater.text.segment import relevant_sentences, split_sentences


def make_comment(*texts: str, votes: int = 0) -> CleanComment:
    tokens = [
        Token(text=text, kind="punctuation" if text in ".!?," else "word") for text in texts
    ]
    return CleanComment(tokens=tokens, votes=votes, source_rating=3)


def words(sentence: Sentence):
    return [token.text for token in sentence.tokens]


def test_periods_split_sentences():
    comment = make_comment("great", "phone", ".", "bad", "battery", ".", votes=2)
    sentences = split_sentences(comment)

    assert [words(s) for s in sentences] == [["great", "phone"], ["bad", "battery"]]
    assert all(s.votes == 2 for s in sentences)
    assert sentences[0].terminators == (".",)


def test_strict_mode_discards_unterminated_tail():
    comment = make_comment("great", "phone")
    assert split_sentences(comment, strict=True) == []
    assert [words(s) for s in split_sentences(comment)] == [["great", "phone"]]


def test_strict_mode_only_splits_on_periods():
    comment = make_comment("wow", "!", "nice", "phone", ".")
    sentences = split_sentences(comment, strict=True)

    assert [words(s) for s in sentences] == [["wow", "!", "nice", "phone"]]
    assert sentences[0].exclamations == 1


def test_terminator_runs_yield_no_empty_sentences():
    comment = make_comment(".", "good", "!", "!", "?", "bad", ".", ".")
    sentences = split_sentences(comment)

    assert [words(s) for s in sentences] == [["good"], ["bad"]]
    assert sentences[0].terminators == ("!", "!", "?")
    assert sentences[0].exclamations == 2


def test_commas_do_not_end_sentences():
    comment = make_comment("good", "phone", ",", "good", "price", ".")
    assert len(split_sentences(comment)) == 1


def test_relevant_sentences_fill_features(lexicon):
    comment = make_comment(
        "the", "sound", "is", "great", ".",
        "i", "love", "it", ".",
        "sound", "and", "battery", "are", "great", "sound", ".",
    )
    kept = relevant_sentences(split_sentences(comment), lexicon)

    assert [s.features for s in kept] == [frozenset({"sound"}), frozenset({"sound", "battery"})]
    assert words(kept[0]) == ["the", "sound", "is", "great"]


def rejoin(sentences):
    return [text for s in sentences for text in [*words(s), *s.terminators]]


def expected_tokens(texts, stops):
    kept = list(texts)
    while kept and kept[0] in stops:
        kept.pop(0)
    if stops == {"."}:
        last = max((i for i, text in enumerate(kept) if text == "."), default=-1)
        kept = kept[: last + 1]
    return kept


@pytest.mark.parametrize("strict, stops", [(False, {".", "!", "?"}), (True, {"."})])
def test_rejoined_sentences_reproduce_the_comment(strict, stops):
    rng = random.Random(7)
    alphabet = ["good", "phone", "bad", ".", "!", "?", ","]
    for _ in range(300):
        texts = [rng.choice(alphabet) for _ in range(rng.randint(1, 12))]
        sentences = split_sentences(make_comment(*texts), strict=strict)

        assert rejoin(sentences) == expected_tokens(texts, stops)
        assert all(s.tokens for s in sentences)
