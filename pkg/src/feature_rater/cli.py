from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from pydantic import ValidationError

from .config import ColumnMapping, RunConfig
from .errors import FeatureRaterError
from .ingest import load_csv
from .reports import (
    emit,
    render_distribution,
    render_eval,
    render_frequency,
    render_ranking,
    render_ratings,
    render_recommendation,
)
from .schemas import (
    Corpus,
    EvalReport,
    FeatureDistribution,
    FrequencyReport,
    ProductRank,
    ProductRatings,
    Recommendation,
)
from .scoring.rankeval import evaluate_phone_feature, feature_distribution, rank_products, recommend
from .scoring.ratings import RatingResources, rate_corpus
from .scoring.sentiment import load_sentiment_lexicon
from .text.lexicon import elect_keywords, frequency_table, load_lexicon
from .text.preprocess import load_emoticons
from .text.spelling import load_cache, load_dictionary, save_cache

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s | %(levelname)s | %(name)s | %(message)s"


def load_resources(cfg: RunConfig) -> RatingResources:
    return RatingResources(
        lexicon=load_lexicon(cfg.lexicon),
        dictionary=load_dictionary(cfg.dictionary),
        sentiment=load_sentiment_lexicon(
            cfg.sentiment_lexicon, cfg.sentiment_boosters, cfg.sentiment_negators
        ),
        emoticons=load_emoticons(cfg.emoticons),
        heuristics=cfg.heuristics,
        strict=cfg.strict_eq4,
    )


def rate_input(cfg: RunConfig) -> Tuple[Corpus, Dict[str, ProductRatings]]:
    resources = load_resources(cfg)
    corpus = load_csv(cfg.input, cfg.columns)
    if cfg.cache is not None:
        load_cache(resources.dictionary, cfg.cache)
    ratings = rate_corpus(corpus, resources, workers=cfg.workers, progress=cfg.progress)
    if cfg.cache is not None:
        save_cache(resources.dictionary, cfg.cache)
    rated = sum(1 for product in ratings.values() if product.ratings)
    logger.info("Rated %d of %d products on at least one feature", rated, len(ratings))
    return corpus, ratings


def cmd_freq_table(cfg: RunConfig) -> FrequencyReport:
    lexicon = load_lexicon(cfg.lexicon)
    emoticons = load_emoticons(cfg.emoticons)
    corpus = load_csv(cfg.input, cfg.columns)
    report = frequency_table(corpus, cfg.min_fraction, lexicon=lexicon, emoticons=emoticons)
    elections = elect_keywords(lexicon, report)
    for election in elections:
        if not election.agrees and election.elected_count:
            logger.info(
                "Feature '%s': member '%s' is more frequent (%d vs %d)",
                election.keyword,
                election.elected,
                election.elected_count,
                election.keyword_count,
            )
    emit(render_frequency(report, cfg.format, elections), cfg.out)
    return report


def cmd_rate(cfg: RunConfig) -> Dict[str, ProductRatings]:
    _, ratings = rate_input(cfg)
    emit(render_ratings(ratings, cfg.format), cfg.out)
    return ratings


def cmd_rank(cfg: RunConfig) -> List[ProductRank]:
    _, ratings = rate_input(cfg)
    # rank numbers come from the full ranking; min_best only trims the listing
    ranking = [
        entry for entry in rank_products(ratings) if entry.best_feature_count >= cfg.min_best
    ]
    emit(render_ranking(ranking, cfg.format), cfg.out)
    return ranking


def cmd_recommend(cfg: RunConfig, feature: Optional[str] = None) -> Recommendation:
    _, ratings = rate_input(cfg)
    recommendation = recommend(feature or cfg.feature, ratings, rank_products(ratings))
    emit(render_recommendation(recommendation, cfg.format), cfg.out)
    return recommendation


def cmd_eval(cfg: RunConfig) -> EvalReport:
    corpus, ratings = rate_input(cfg)
    report = evaluate_phone_feature(corpus, ratings, feature=cfg.feature, weights=cfg.gt_weights)
    emit(render_eval(report, cfg.format), cfg.out)
    return report


def cmd_distribution(cfg: RunConfig) -> List[FeatureDistribution]:
    _, ratings = rate_input(cfg)
    distributions = feature_distribution(ratings)
    emit(render_distribution(distributions, cfg.format), cfg.out)
    return distributions


COMMANDS: Mapping[str, Callable[[RunConfig], object]] = {
    "freq-table": cmd_freq_table,
    "rate": cmd_rate,
    "rank": cmd_rank,
    "recommend": cmd_recommend,
    "eval": cmd_eval,
    "distribution": cmd_distribution,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="featrate",
        description="Feature-level star ratings from product review text and review votes.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", required=True, type=Path, help="review CSV file")
    common.add_argument("--lexicon", type=Path, help="feature lexicon file")
    common.add_argument("--sent-lexicon", type=Path, help="tab-separated valence lexicon")
    common.add_argument("--boosters", type=Path, help="booster word list")
    common.add_argument("--negators", type=Path, help="negator word list")
    common.add_argument("--emoticons", type=Path, help="emoticon list")
    common.add_argument("--dict", dest="dictionary", type=Path, help="'word count' frequency list")
    common.add_argument(
        "--strict-eq4",
        "--strict-periods",
        dest="strict_eq4",
        action="store_true",
        help="split sentences on '.' only",
    )
    common.add_argument(
        "--gt-weights", choices=["votes", "votes-plus-one"], default="votes-plus-one"
    )
    common.add_argument("--format", choices=["csv", "json"], default="csv")
    common.add_argument("--out", type=Path, help="output file (default: stdout)")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--cache", type=Path, help="JSON spell-correction cache file")
    common.add_argument("--min-fraction", type=float, default=0.0002)
    common.add_argument("--no-progress", action="store_true")
    common.add_argument(
        "--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"], default="INFO"
    )
    defaults = ColumnMapping()
    for field in ("product", "brand", "price", "rating", "reviews", "votes"):
        common.add_argument(
            f"--{field}-column",
            default=getattr(defaults, field),
            help=f"CSV column for {field} (default: %(default)r)",
        )

    commands = parser.add_subparsers(dest="command", required=True)
    commands.add_parser("freq-table", parents=[common], help="word frequency table")
    commands.add_parser("rate", parents=[common], help="feature ratings per product")
    rank_cmd = commands.add_parser("rank", parents=[common], help="rank products by best features")
    rank_cmd.add_argument(
        "--min-best",
        type=int,
        default=0,
        help="only list products best at this many features or more",
    )
    recommend_cmd = commands.add_parser(
        "recommend", parents=[common], help="best product for a feature"
    )
    recommend_cmd.add_argument("--feature", required=True)
    eval_cmd = commands.add_parser(
        "eval", parents=[common], help="grade a feature against customer ratings"
    )
    eval_cmd.add_argument("--feature", default="phone")
    commands.add_parser("distribution", parents=[common], help="products per star, per feature")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        input=args.input,
        columns=ColumnMapping(
            product=args.product_column,
            brand=args.brand_column or None,
            price=args.price_column or None,
            rating=args.rating_column,
            reviews=args.reviews_column,
            votes=args.votes_column,
        ),
        lexicon=args.lexicon,
        sentiment_lexicon=args.sent_lexicon,
        sentiment_boosters=args.boosters,
        sentiment_negators=args.negators,
        emoticons=args.emoticons,
        dictionary=args.dictionary,
        strict_eq4=args.strict_eq4,
        gt_weights=args.gt_weights,
        min_fraction=args.min_fraction,
        min_best=getattr(args, "min_best", 0),
        feature=getattr(args, "feature", None) or "phone",
        format=args.format,
        out=args.out,
        workers=args.workers,
        cache=args.cache,
        progress=not args.no_progress,
        log_level=args.log_level,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=args.log_level, format=LOG_FORMAT, stream=sys.stderr)
    try:
        cfg = config_from_args(args)
        COMMANDS[args.command](cfg)
    except (FeatureRaterError, ValidationError) as exc:
        logger.debug("Command '%s' failed", args.command, exc_info=True)
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
