from pathlib import Path

import pytest

from feature_rater.ingest import load_csv
from feature_rater.schemas import Corpus, FeatureLexicon, SentimentLexicon, SpellDictionary
from feature_rater.scoring.ratings import RatingResources
from feature_rater.scoring.sentiment import load_sentiment_lexicon
from feature_rater.text.lexicon import load_lexicon
from feature_rater.text.preprocess import load_emoticons
from feature_rater.text.spelling import load_dictionary

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def lexicon() -> FeatureLexicon:
    return load_lexicon()


@pytest.fixture
def dictionary() -> SpellDictionary:
    return load_dictionary(FIXTURES / "word_frequencies.txt")


@pytest.fixture(scope="session")
def sentiment() -> SentimentLexicon:
    return load_sentiment_lexicon(
        FIXTURES / "sentiment_lexicon.txt",
        FIXTURES / "boosters.txt",
        FIXTURES / "negators.txt",
    )


@pytest.fixture
def resources(lexicon, dictionary, sentiment) -> RatingResources:
    return RatingResources(
        lexicon=lexicon,
        dictionary=dictionary,
        sentiment=sentiment,
        emoticons=load_emoticons(),
    )


@pytest.fixture
def corpus() -> Corpus:
    return load_csv(FIXTURES / "reviews.csv")


def fixture_args(*extra: str) -> list[str]:
    """Command-line flags that point every word list at the test fixtures."""
    return [
        "--input",
        str(FIXTURES / "reviews.csv"),
        "--sent-lexicon",
        str(FIXTURES / "sentiment_lexicon.txt"),
        "--boosters",
        str(FIXTURES / "boosters.txt"),
        "--negators",
        str(FIXTURES / "negators.txt"),
        "--dict",
        str(FIXTURES / "word_frequencies.txt"),
        "--no-progress",
        *extra,
    ]
