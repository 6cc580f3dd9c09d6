from __future__ import annotations

import logging
import math
from typing import Dict, List, Mapping, Sequence

import numpy as np
from sklearn.metrics import confusion_matrix, mean_absolute_error, mean_squared_error

from ..errors import NotFoundError
from ..schemas import (
    Corpus,
    EvalReport,
    FeatureDistribution,
    GroundTruthWeights,
    ProductRank,
    ProductRatings,
    Recommendation,
    ReviewRecord,
    STAR_VALUES,
)

logger = logging.getLogger(__name__)


def best_ratings(all_ratings: Mapping[str, ProductRatings]) -> Dict[str, float]:
    """Highest final rating per feature over every product."""
    best: Dict[str, float] = {}
    for product in all_ratings.values():
        for feature, rating in product.ratings.items():
            if rating.final > best.get(feature, -math.inf):
                best[feature] = rating.final
    return best


def rank_products(all_ratings: Mapping[str, ProductRatings]) -> List[ProductRank]:
    """
    Order products by the number of features on which they hold the top rating.

    Every product tied at a feature's maximum counts that feature. Ties in
    the count go to more total review votes, then to the product name.
    """
    best = best_ratings(all_ratings)
    best_features = {
        name: sorted(f for f, rating in product.ratings.items() if rating.final == best[f])
        for name, product in all_ratings.items()
    }
    order = sorted(
        all_ratings.values(),
        key=lambda p: (-len(best_features[p.product_name]), -p.review_votes, p.product_name),
    )
    return [
        ProductRank(
            rank=position,
            product_name=product.product_name,
            best_feature_count=len(best_features[product.product_name]),
            tiebreak_votes=product.review_votes,
            best_features=best_features[product.product_name],
        )
        for position, product in enumerate(order, start=1)
    ]


def recommend(
    feature: str,
    all_ratings: Mapping[str, ProductRatings],
    ranking: Sequence[ProductRank],
) -> Recommendation:
    """Highest-ranked product among those tied at ``feature``'s top rating."""
    rated = {
        name: product.ratings[feature].final
        for name, product in all_ratings.items()
        if feature in product.ratings
    }
    if not rated:
        raise NotFoundError(f"No product has a rating for feature '{feature}'")
    top = max(rated.values())
    for entry in ranking:
        if rated.get(entry.product_name) == top:
            return Recommendation(
                feature=feature, product_name=entry.product_name, rating=top, rank=entry.rank
            )
    raise NotFoundError(f"None of the top-rated products for '{feature}' appears in the ranking")


def ground_truth(
    records: Sequence[ReviewRecord], weights: GroundTruthWeights = "votes-plus-one"
) -> float:
    """
    Vote-weighted mean of the customers' overall star ratings.

    With ``weights="votes"`` a product whose reviews have no votes at all
    falls back to the plain mean.
    """
    if not records:
        raise NotFoundError("Cannot compute a ground-truth rating without reviews")
    stars = np.array([record.overall_rating for record in records], dtype=float)
    votes = np.array([record.review_votes for record in records], dtype=float)
    if weights == "votes-plus-one":
        votes = votes + 1.0
    if votes.sum() == 0:
        return float(stars.mean())
    return float(np.average(stars, weights=votes))


def star_round(values: np.ndarray) -> np.ndarray:
    """Round half up to whole stars, clamped to 1..5."""
    return np.clip(np.floor(np.asarray(values, dtype=float) + 0.5), 1, 5).astype(int)


def evaluate_phone_feature(
    corpus: Corpus,
    all_ratings: Mapping[str, ProductRatings],
    feature: str = "phone",
    weights: GroundTruthWeights = "votes-plus-one",
) -> EvalReport:
    """
    Compare one feature's final ratings with the customers' overall ratings.

    Products without a rating for ``feature`` take no part.
    """
    names = sorted(
        name
        for name, product in all_ratings.items()
        if feature in product.ratings and corpus.products.get(name)
    )
    if not names:
        logger.warning("No product has a '%s' rating; evaluation is empty", feature)
        return EvalReport(feature=feature)

    predicted = np.array([all_ratings[name].ratings[feature].final for name in names])
    actual = np.array([ground_truth(corpus.products[name], weights) for name in names])

    mse = float(mean_squared_error(actual, predicted))
    mae = float(mean_absolute_error(actual, predicted))
    matrix = confusion_matrix(star_round(actual), star_round(predicted), labels=list(STAR_VALUES))
    n = len(names)
    exact = int(np.trace(matrix))
    within_one = exact + int(np.trace(matrix, offset=1)) + int(np.trace(matrix, offset=-1))

    return EvalReport(
        feature=feature,
        n=n,
        mse=mse,
        rmse=math.sqrt(mse),
        mae=mae,
        exact_accuracy=exact / n,
        within_one_accuracy=within_one / n,
        confusion=matrix.astype(int).tolist(),
    )


def feature_distribution(
    all_ratings: Mapping[str, ProductRatings],
) -> List[FeatureDistribution]:
    """Per feature, how many products round to each whole-star rating."""
    finals: Dict[str, List[float]] = {}
    for product in all_ratings.values():
        for feature, rating in product.ratings.items():
            finals.setdefault(feature, []).append(rating.final)
    distributions: List[FeatureDistribution] = []
    for feature in sorted(finals):
        stars = star_round(np.array(finals[feature]))
        counts = [int(np.count_nonzero(stars == star)) for star in STAR_VALUES]
        distributions.append(FeatureDistribution(feature=feature, counts=counts))
    return distributions
