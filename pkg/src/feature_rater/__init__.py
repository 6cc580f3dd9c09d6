"""Feature-level product ratings from review text and review votes."""

from .config import ColumnMapping, RunConfig
from .errors import (
    ContractViolation,
    CorpusLoadError,
    FeatureRaterError,
    LexiconError,
    NotFoundError,
)
from .ingest import corpus_stats, load_csv
from .scoring import (
    RatingResources,
    evaluate_phone_feature,
    feature_distribution,
    ground_truth,
    load_sentiment_lexicon,
    rank_products,
    rate_corpus,
    rate_product,
    recommend,
    score_sentence,
)
from .text import frequency_table, load_dictionary, load_lexicon, preprocess_comment

__all__ = [
    "ColumnMapping",
    "RunConfig",
    "FeatureRaterError",
    "CorpusLoadError",
    "LexiconError",
    "NotFoundError",
    "ContractViolation",
    "load_csv",
    "corpus_stats",
    "load_lexicon",
    "frequency_table",
    "load_dictionary",
    "preprocess_comment",
    "load_sentiment_lexicon",
    "score_sentence",
    "RatingResources",
    "rate_product",
    "rate_corpus",
    "rank_products",
    "recommend",
    "ground_truth",
    "evaluate_phone_feature",
    "feature_distribution",
]
