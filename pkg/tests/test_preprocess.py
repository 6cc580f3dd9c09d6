import pytest

from feature_rater.schemas import ReviewRecord, Token
from feature_rater.text.preprocess import (
    correct_token,
    load_emoticons,
    preprocess_comment,
    retain_useful_chars,
    tokenize,
)


def make_record(text: str, votes: int = 0) -> ReviewRecord:
    return ReviewRecord(product_name="P", overall_rating=4, review_text=text, review_votes=votes)


def texts(tokens):
    return [token.text for token in tokens]


@pytest.mark.parametrize(
    "raw, cleaned",
    [
        ("Great phone!!! costs $250", "Great phone!!! costs $"),
        ("scores 8/10", "scores 8/"),
        ("", ""),
        ("tabs\tand\nnewlines", "tabs and newlines"),
        ("café ❤ ok", "caf ok"),
    ],
)
def test_retain_useful_chars(raw, cleaned):
    assert retain_useful_chars(raw) == cleaned


def test_retain_useful_chars_is_idempotent(corpus):
    for record in corpus.records():
        once = retain_useful_chars(record.review_text)
        assert retain_useful_chars(once) == once


def test_tokenize_splits_edge_punctuation():
    tokens = tokenize("Excellent phone.")
    assert texts(tokens) == ["Excellent", "phone", "."]
    assert [t.kind for t in tokens] == ["word", "word", "punctuation"]


def test_tokenize_keeps_interior_hyphen_and_apostrophe():
    assert texts(tokenize("battery-life! don't")) == ["battery-life", "!", "don't"]


def test_tokenize_emoticons():
    assert tokenize(":-)") == [Token(text=":-)", kind="emoticon")]
    assert texts(tokenize("love it :)!")) == ["love", "it", ":)", "!"]
    assert tokenize("<3")[0].kind == "emoticon"


def test_tokenize_marks_allcaps_words():
    tokens = tokenize("GREAT phone")
    assert tokens[0].allcaps
    assert not tokens[1].allcaps


def test_bundled_emoticons_skip_comment_line():
    marks = load_emoticons()
    assert ":)" in marks
    assert "8)" in marks
    assert not any(mark.startswith("# ") for mark in marks)


def test_correct_token_substitutes_keywords(lexicon, dictionary):
    assert correct_token(Token(text="speakers"), lexicon, dictionary).text == "sound"
    assert correct_token(Token(text="Photos"), lexicon, dictionary).text == "pictures"
    assert correct_token(Token(text="baterry"), lexicon, dictionary).text == "battery"


def test_correct_token_checks_raw_word_before_spelling(lexicon, dictionary):
    assert correct_token(Token(text="sd"), lexicon, dictionary).text == "sd"
    assert correct_token(Token(text="otg"), lexicon, dictionary).text == "otg"


def test_correct_token_passes_punctuation_through(lexicon, dictionary):
    bang = Token(text="!", kind="punctuation")
    assert correct_token(bang, lexicon, dictionary) is bang


def test_correct_token_keeps_allcaps_flag(lexicon, dictionary):
    token = correct_token(Token(text="GOOD", allcaps=True), lexicon, dictionary)
    assert token == Token(text="good", kind="word", allcaps=True)


def test_correct_token_is_idempotent_on_fixture_words(corpus, lexicon, dictionary):
    marks = load_emoticons()
    for record in corpus.records():
        for token in tokenize(retain_useful_chars(record.review_text), marks):
            once = correct_token(token, lexicon, dictionary)
            assert correct_token(once, lexicon, dictionary) == once


def test_preprocess_comment_pipeline(lexicon, dictionary):
    comment = preprocess_comment(make_record("Good speakers.", votes=3), lexicon, dictionary)
    assert texts(comment.tokens) == ["good", "sound", "."]
    assert comment.votes == 3
    assert comment.source_rating == 4


def test_preprocess_comment_drops_textless_reviews(lexicon, dictionary):
    assert preprocess_comment(make_record("124 456"), lexicon, dictionary) is None


def test_preprocess_comment_keeps_emoticons(lexicon, dictionary):
    comment = preprocess_comment(make_record(":-)"), lexicon, dictionary)
    assert comment.tokens == [Token(text=":-)", kind="emoticon")]


def test_preprocess_output_words_are_lowercase(corpus, lexicon, dictionary):
    for record in corpus.records():
        comment = preprocess_comment(record, lexicon, dictionary)
        words = [t.text for t in comment.tokens if t.kind == "word"]
        assert all(word == word.lower() for word in words)
