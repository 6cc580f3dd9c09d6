from .lexicon import elect_keywords, frequency_table, load_lexicon, resolve
from .preprocess import (
    correct_token,
    load_emoticons,
    preprocess_comment,
    retain_useful_chars,
    tokenize,
)
from .segment import relevant_sentences, split_sentences
from .spelling import load_dictionary, spell_correct

__all__ = [
    "load_lexicon",
    "resolve",
    "frequency_table",
    "elect_keywords",
    "retain_useful_chars",
    "tokenize",
    "correct_token",
    "preprocess_comment",
    "load_emoticons",
    "load_dictionary",
    "spell_correct",
    "split_sentences",
    "relevant_sentences",
]
