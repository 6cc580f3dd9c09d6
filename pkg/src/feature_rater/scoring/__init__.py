from .rankeval import (
    evaluate_phone_feature,
    feature_distribution,
    ground_truth,
    rank_products,
    recommend,
)
from .ratings import RatingResources, accumulate, finalize, rate_corpus, rate_product
from .sentiment import (
    bucket,
    compound,
    load_sentiment_lexicon,
    raw_valence_sum,
    score_sentence,
)

__all__ = [
    "RatingResources",
    "accumulate",
    "finalize",
    "rate_product",
    "rate_corpus",
    "load_sentiment_lexicon",
    "raw_valence_sum",
    "compound",
    "bucket",
    "score_sentence",
    "rank_products",
    "recommend",
    "ground_truth",
    "evaluate_phone_feature",
    "feature_distribution",
]
