from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from pydantic import BaseModel, Field
from tqdm import tqdm

from ..errors import ContractViolation
from ..schemas import (
    Corpus,
    FeatureAccumulator,
    FeatureLexicon,
    FeatureRating,
    HeuristicConfig,
    ProductRatings,
    ReviewRecord,
    ScoredSentence,
    SentimentLexicon,
    SpellDictionary,
)
from ..text.preprocess import preprocess_comment
from ..text.segment import relevant_sentences, split_sentences
from .sentiment import score_sentence

logger = logging.getLogger(__name__)


class RatingResources(BaseModel):
    """Everything a rating job reads; shared unchanged by every product."""

    lexicon: FeatureLexicon
    dictionary: SpellDictionary
    sentiment: SentimentLexicon
    emoticons: FrozenSet[str]
    heuristics: HeuristicConfig = Field(default_factory=HeuristicConfig)
    strict: bool = False


def accumulate(sentences: Iterable[ScoredSentence]) -> Dict[str, FeatureAccumulator]:
    """Vote-weighted star sums per feature; each sentence weighs ``votes + 1``."""
    totals: Dict[str, FeatureAccumulator] = {}
    for sentence in sentences:
        weight = sentence.votes + 1
        for feature in sentence.features:
            acc = totals.setdefault(feature, FeatureAccumulator())
            acc.cumulative += sentence.stars * weight
            acc.weight_total += weight
            acc.mention_count += 1
    return totals


def finalize(acc: Dict[str, FeatureAccumulator]) -> List[FeatureRating]:
    ratings: List[FeatureRating] = []
    for feature in sorted(acc):
        totals = acc[feature]
        if totals.weight_total <= 0:
            raise ContractViolation(f"feature '{feature}' accumulated zero weight")
        ratings.append(
            FeatureRating(
                feature=feature,
                cumulative=totals.cumulative,
                weight_total=totals.weight_total,
                final=totals.cumulative / totals.weight_total,
                mention_count=totals.mention_count,
            )
        )
    return ratings


def score_records(
    records: Iterable[ReviewRecord], resources: RatingResources
) -> List[ScoredSentence]:
    """Preprocess, segment, filter and score every review of one product."""
    scored: List[ScoredSentence] = []
    for record in records:
        comment = preprocess_comment(
            record, resources.lexicon, resources.dictionary, resources.emoticons
        )
        if comment is None:
            continue
        sentences = split_sentences(comment, strict=resources.strict)
        for sentence in relevant_sentences(sentences, resources.lexicon):
            score = score_sentence(sentence, resources.sentiment, resources.heuristics)
            scored.append(
                ScoredSentence(
                    features=sentence.features,
                    stars=score.stars,
                    votes=sentence.votes,
                    compound=score.compound,
                )
            )
    return scored


def rate_product(
    product_name: str, records: Sequence[ReviewRecord], resources: RatingResources
) -> ProductRatings:
    ratings = finalize(accumulate(score_records(records, resources)))
    return ProductRatings(
        product_name=product_name,
        ratings={rating.feature: rating for rating in ratings},
        review_count=len(records),
        review_votes=sum(record.review_votes for record in records),
    )


def rate_corpus(
    corpus: Corpus,
    resources: RatingResources,
    workers: int = 1,
    progress: bool = False,
) -> Dict[str, ProductRatings]:
    """
    Rate every product of ``corpus``, keyed and ordered by product name.

    With ``workers > 1`` products are rated in a process pool; each worker
    sends back the spelling corrections it computed so the caller's
    dictionary memo ends up as warm as a single-process run would leave it.
    """
    if workers < 1:
        raise ContractViolation(f"workers must be >= 1, got {workers}")
    names = sorted(corpus.products)
    if workers == 1 or len(names) < 2:
        iterator = tqdm(names, desc="Rating products", unit="product", disable=not progress)
        return {name: rate_product(name, corpus.products[name], resources) for name in iterator}

    payloads = [
        [(name, corpus.products[name]) for name in chunk]
        for chunk in _chunks(names, workers * 4)
    ]
    logger.info("Rating %d products in %d chunks on %d workers", len(names), len(payloads), workers)

    results: Dict[str, ProductRatings] = {}
    with ProcessPoolExecutor(
        max_workers=workers, initializer=_init_worker, initargs=(resources,)
    ) as pool:
        outputs = pool.map(_rate_chunk, payloads)
        for rated, corrections in tqdm(
            outputs, total=len(payloads), desc="Rating chunks", unit="chunk", disable=not progress
        ):
            resources.dictionary.warm(corrections)
            for product in rated:
                results[product.product_name] = product
    return {name: results[name] for name in names}


def _chunks(names: List[str], count: int) -> List[List[str]]:
    size = max(1, -(-len(names) // count))
    return [names[start : start + size] for start in range(0, len(names), size)]


_worker_resources: Optional[RatingResources] = None


def _init_worker(resources: RatingResources) -> None:
    global _worker_resources
    _worker_resources = resources


def _rate_chunk(
    items: List[Tuple[str, List[ReviewRecord]]],
) -> Tuple[List[ProductRatings], Dict[str, str]]:
    resources = _worker_resources
    if resources is None:
        raise ContractViolation("rating worker was not initialised")
    rated = [rate_product(name, records, resources) for name, records in items]
    return rated, resources.dictionary.drain_new_entries()
