import numpy as np
import pytest

from feature_rater.errors import NotFoundError
from feature_rater.schemas import Corpus, FeatureRating, ProductRatings, ReviewRecord
from feature_rater.scoring.rankeval import (
    evaluate_phone_feature,
    feature_distribution,
    ground_truth,
    rank_products,
    recommend,
    star_round,
)
from feature_rater.scoring.ratings import rate_corpus


def make_product(name: str, votes: int = 0, **features) -> ProductRatings:
    """``features`` maps a feature to ``(cumulative, weight_total)``."""
    ratings = {
        feature: FeatureRating(
            feature=feature,
            cumulative=cumulative,
            weight_total=weight,
            final=cumulative / weight,
            mention_count=1,
        )
        for feature, (cumulative, weight) in features.items()
    }
    return ProductRatings(product_name=name, ratings=ratings, review_votes=votes)


def make_records(name: str, ratings, votes):
    return [
        ReviewRecord(product_name=name, overall_rating=r, review_text="ok", review_votes=v)
        for r, v in zip(ratings, votes)
    ]


def index(*products: ProductRatings):
    return {product.product_name: product for product in products}


def test_rank_by_number_of_best_features():
    ratings = index(
        make_product("A", battery=(5, 1), sound=(4, 1), camera=(2, 1)),
        make_product("B", battery=(3, 1), sound=(3, 1), camera=(5, 1)),
    )
    ranking = rank_products(ratings)

    assert [(r.product_name, r.rank, r.best_feature_count) for r in ranking] == [
        ("A", 1, 2),
        ("B", 2, 1),
    ]
    assert ranking[0].best_features == ["battery", "sound"]


def test_tied_products_both_count_the_feature():
    ranking = rank_products(
        index(make_product("N9", music=(5, 1)), make_product("JUNING", music=(10, 2)))
    )
    assert all(entry.best_feature_count == 1 for entry in ranking)


def test_rank_ties_go_to_votes_then_name():
    ranking = rank_products(
        index(
            make_product("C", votes=1, vga=(4, 1)),
            make_product("B", votes=9, sd=(4, 1)),
            make_product("A", votes=1, otg=(4, 1)),
            make_product("D", votes=50),
        )
    )
    assert [entry.product_name for entry in ranking] == ["B", "A", "C", "D"]
    assert ranking[-1].best_feature_count == 0


def test_rank_empty():
    assert rank_products({}) == []


def test_best_feature_counts_cover_every_rated_feature():
    ratings = index(
        make_product("A", phone=(4, 1), sound=(3, 1)),
        make_product("B", phone=(4, 1), camera=(2, 1)),
    )
    total = sum(entry.best_feature_count for entry in rank_products(ratings))
    assert total >= 3


def test_recommend_prefers_higher_ranked_tied_product():
    ratings = index(
        make_product("Nokia N9", votes=10, music=(5, 1), sound=(5, 1)),
        make_product("JUNING", votes=3, music=(5, 1), sound=(4, 1)),
    )
    choice = recommend("music", ratings, rank_products(ratings))

    assert choice.product_name == "Nokia N9"
    assert choice.rating == 5.0
    assert choice.rank == 1


def test_recommend_single_rated_product():
    ratings = index(make_product("A", vga=(3, 1)), make_product("B", sound=(5, 1)))
    assert recommend("vga", ratings, rank_products(ratings)).product_name == "A"


def test_recommend_unrated_feature_is_not_found():
    ratings = index(make_product("A", sound=(5, 1)))
    with pytest.raises(NotFoundError, match="pedometer"):
        recommend("pedometer", ratings, rank_products(ratings))


def test_ground_truth_examples():
    assert ground_truth(make_records("P", [4], [0])) == 4.0
    assert ground_truth(make_records("P", [5, 1], [3, 0])) == pytest.approx(4.2)
    assert ground_truth(make_records("P", [3, 3, 3], [7, 0, 2])) == 3.0


def test_ground_truth_votes_only():
    assert ground_truth(make_records("P", [5, 1], [3, 1]), weights="votes") == pytest.approx(4.0)
    assert ground_truth(make_records("P", [5, 2], [0, 0]), weights="votes") == pytest.approx(3.5)


def test_ground_truth_needs_reviews():
    with pytest.raises(NotFoundError):
        ground_truth([])


def test_star_round_is_half_up_and_clamped():
    values = np.array([0.2, 1.5, 2.5, 3.49, 4.5, 5.4])
    assert star_round(values).tolist() == [1, 2, 3, 3, 5, 5]


def test_evaluate_perfect_predictions():
    corpus = Corpus(
        products={"A": make_records("A", [4], [0]), "B": make_records("B", [2, 2], [1, 0])}
    )
    ratings = index(make_product("A", phone=(4, 1)), make_product("B", phone=(6, 3)))
    report = evaluate_phone_feature(corpus, ratings)

    assert (report.n, report.mse, report.rmse, report.mae) == (2, 0.0, 0.0, 0.0)
    assert report.confusion[3][3] == 1
    assert report.confusion[1][1] == 1
    assert report.exact_accuracy == 1.0


def test_evaluate_single_product():
    corpus = Corpus(products={"P": make_records("P", [4], [0])})
    ratings = index(make_product("P", phone=(17, 5)))
    report = evaluate_phone_feature(corpus, ratings)

    assert report.mae == pytest.approx(0.6)
    assert report.rmse == pytest.approx(0.6)
    assert report.confusion[3][2] == 1
    assert report.exact_accuracy == 0.0
    assert report.within_one_accuracy == 1.0


def test_evaluate_skips_products_without_the_feature():
    corpus = Corpus(products={"P": make_records("P", [4], [0]), "Q": make_records("Q", [1], [0])})
    ratings = index(make_product("P", phone=(4, 1)), make_product("Q", sound=(5, 1)))

    assert evaluate_phone_feature(corpus, ratings).n == 1
    assert evaluate_phone_feature(corpus, ratings, feature="camera").n == 0


def test_evaluate_fixture_corpus(corpus, resources):
    ratings = rate_corpus(corpus, resources)
    report = evaluate_phone_feature(corpus, ratings)

    # predicted 5, 7/3, 5 against ground truths 56/12, 20/11, 46/15
    errors = [5 - 56 / 12, 7 / 3 - 20 / 11, 5 - 46 / 15]
    assert report.n == 3
    assert report.mae == pytest.approx(sum(errors) / 3)
    assert report.mse == pytest.approx(sum(e * e for e in errors) / 3)
    assert report.mae <= report.rmse
    assert report.confusion[4][4] == 1
    assert report.confusion[1][1] == 1
    assert report.confusion[2][4] == 1
    assert report.exact_accuracy == pytest.approx(2 / 3)
    assert report.within_one_accuracy == pytest.approx(2 / 3)


def test_fixture_ranking_and_recommendations(corpus, resources):
    ratings = rate_corpus(corpus, resources)
    ranking = rank_products(ratings)

    assert [(r.product_name, r.best_feature_count) for r in ranking] == [
        ("Alpha One", 5),
        ("Gamma Three", 4),
        ("Beta Two", 0),
    ]
    assert recommend("phone", ratings, ranking).product_name == "Alpha One"
    assert recommend("pictures", ratings, ranking).product_name == "Gamma Three"
    with pytest.raises(NotFoundError):
        recommend("vga", ratings, ranking)


def test_feature_distribution(corpus, resources):
    distributions = {d.feature: d for d in feature_distribution(rate_corpus(corpus, resources))}

    assert distributions["phone"].counts == [0, 1, 0, 0, 2]
    assert distributions["battery"].counts == [0, 1, 2, 0, 0]
    assert distributions["screen"].rated_products == 1
