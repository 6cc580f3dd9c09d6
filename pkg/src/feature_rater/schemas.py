from __future__ import annotations

import math
from typing import Dict, FrozenSet, Iterator, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, field_validator, model_validator

TokenKind = Literal["word", "punctuation", "emoticon"]
OutputFormat = Literal["csv", "json"]
GroundTruthWeights = Literal["votes", "votes-plus-one"]

STAR_VALUES: Tuple[int, ...] = (1, 2, 3, 4, 5)


# --- ingest -----------------------------------------------------------------


class ReviewRecord(BaseModel):
    model_config = ConfigDict(frozen=True)

    product_name: str
    brand_name: Optional[str] = None
    price: Optional[float] = None
    overall_rating: int = Field(ge=1, le=5)
    review_text: str
    review_votes: int = Field(default=0, ge=0)

    @field_validator("product_name")
    @classmethod
    def _trimmed_name(cls, value: str) -> str:
        value = value.strip()
        if not value:
            raise ValueError("product_name is empty")
        return value


class LoadReport(BaseModel):
    rows_read: int = 0
    kept: int = 0
    dropped_empty: int = 0
    dropped_malformed: int = 0

    @model_validator(mode="after")
    def _balanced(self) -> "LoadReport":
        if self.kept + self.dropped_empty + self.dropped_malformed != self.rows_read:
            raise ValueError("load report does not add up to rows_read")
        return self


class Corpus(BaseModel):
    products: Dict[str, List[ReviewRecord]] = Field(default_factory=dict)
    report: LoadReport = Field(default_factory=LoadReport)

    @model_validator(mode="after")
    def _keyed_by_product(self) -> "Corpus":
        for name, records in self.products.items():
            for record in records:
                if record.product_name != name:
                    raise ValueError(
                        f"record for '{record.product_name}' filed under product '{name}'"
                    )
        return self

    @property
    def review_count(self) -> int:
        return sum(len(records) for records in self.products.values())

    def records(self) -> Iterator[ReviewRecord]:
        for records in self.products.values():
            yield from records


class CorpusStats(BaseModel):
    product_count: int
    review_count: int
    vote_histogram: Dict[int, int]
    rating_histogram: Dict[int, int]


# --- lexicon ----------------------------------------------------------------


class FeatureSet(BaseModel):
    model_config = ConfigDict(frozen=True)

    keyword: str
    members: FrozenSet[str]

    @model_validator(mode="after")
    def _keyword_is_member(self) -> "FeatureSet":
        if not self.members:
            raise ValueError(f"feature set '{self.keyword}' is empty")
        if self.keyword not in self.members:
            raise ValueError(f"keyword '{self.keyword}' missing from its own set")
        if any(member != member.lower() for member in self.members):
            raise ValueError(f"feature set '{self.keyword}' has non-lowercase members")
        return self


class FeatureLexicon(BaseModel):
    sets: List[FeatureSet]
    member_index: Dict[str, int]

    _keyword_of: Dict[str, str] = PrivateAttr(default_factory=dict)

    @model_validator(mode="after")
    def _index_is_inverse(self) -> "FeatureLexicon":
        expected: Dict[str, int] = {}
        for idx, feature_set in enumerate(self.sets):
            for member in feature_set.members:
                if member in expected:
                    raise ValueError(f"token '{member}' belongs to more than one feature set")
                expected[member] = idx
        if expected != self.member_index:
            raise ValueError("member_index is not the inverse of set membership")
        return self

    def model_post_init(self, __context: object) -> None:
        self._keyword_of = {
            token: self.sets[idx].keyword for token, idx in self.member_index.items()
        }

    @property
    def keywords(self) -> List[str]:
        return [feature_set.keyword for feature_set in self.sets]

    def resolve(self, token: str) -> Optional[str]:
        return self._keyword_of.get(token)

    def __contains__(self, token: object) -> bool:
        return token in self._keyword_of

    def __len__(self) -> int:
        return len(self.sets)


class FrequencyRow(BaseModel):
    token: str
    count: int
    document_count: int
    fraction: float
    keyword: Optional[str] = None


class FrequencyReport(BaseModel):
    review_count: int
    min_fraction: float = Field(ge=0.0, le=1.0)
    rows: List[FrequencyRow] = Field(default_factory=list)

    def counts(self) -> Dict[str, int]:
        return {row.token: row.count for row in self.rows}


class KeywordElection(BaseModel):
    keyword: str
    elected: str
    keyword_count: int
    elected_count: int

    @property
    def agrees(self) -> bool:
        return self.keyword == self.elected


# --- preprocess / segment ---------------------------------------------------


class Token(BaseModel):
    model_config = ConfigDict(frozen=True)

    text: str = Field(min_length=1)
    kind: TokenKind = "word"
    allcaps: bool = False


class CleanComment(BaseModel):
    tokens: List[Token] = Field(min_length=1)
    votes: int = Field(ge=0)
    source_rating: int = Field(ge=1, le=5)


class SpellDictionary(BaseModel):
    entries: Dict[str, int]

    # word -> correction, shared by every lookup on this dictionary
    _memo: Dict[str, str] = PrivateAttr(default_factory=dict)
    # memo entries added since the last drain_new_entries()
    _fresh: Dict[str, str] = PrivateAttr(default_factory=dict)

    @field_validator("entries")
    @classmethod
    def _positive(cls, entries: Dict[str, int]) -> Dict[str, int]:
        for word, count in entries.items():
            if count <= 0:
                raise ValueError(f"dictionary word '{word}' has non-positive count {count}")
        return entries

    def __contains__(self, word: object) -> bool:
        return word in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def recall(self, word: str) -> Optional[str]:
        return self._memo.get(word)

    def remember(self, word: str, correction: str) -> None:
        self._memo[word] = correction
        self._fresh[word] = correction

    def warm(self, corrections: Dict[str, str]) -> None:
        """Preload corrections computed elsewhere without marking them fresh."""
        self._memo.update(corrections)

    def memo(self) -> Dict[str, str]:
        return dict(self._memo)

    def drain_new_entries(self) -> Dict[str, str]:
        fresh, self._fresh = self._fresh, {}
        return fresh


class Sentence(BaseModel):
    tokens: List[Token] = Field(default_factory=list)
    features: FrozenSet[str] = frozenset()
    votes: int = Field(default=0, ge=0)
    # terminator tokens that closed this sentence, e.g. ("!", "!")
    terminators: Tuple[str, ...] = ()

    @property
    def allcaps_flags(self) -> List[bool]:
        return [token.allcaps for token in self.tokens]

    @property
    def exclamations(self) -> int:
        inside = sum(1 for token in self.tokens if token.text == "!")
        return inside + self.terminators.count("!")


# --- sentiment --------------------------------------------------------------


class SentimentLexicon(BaseModel):
    valences: Dict[str, float]
    # +1.0 intensifies, -1.0 dampens; scaled by HeuristicConfig.booster_increment
    boosters: Dict[str, float] = Field(default_factory=dict)
    negators: FrozenSet[str] = frozenset()
    emoticon_valences: Dict[str, float] = Field(default_factory=dict)


class HeuristicConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    negation_scalar: float = -0.74
    negation_window: int = Field(default=3, ge=0)
    booster_increment: float = 0.293
    booster_decay: Tuple[float, float, float] = (1.0, 0.95, 0.9)
    exclamation_increment: float = 0.292
    exclamation_cap: int = Field(default=4, ge=0)
    allcaps_increment: float = 0.733
    normalization_alpha: float = Field(default=15.0, gt=0.0)


class SentenceScore(BaseModel):
    compound: float = Field(ge=-1.0, le=1.0)
    stars: int = Field(ge=1, le=5)


# --- ratings ----------------------------------------------------------------


class ScoredSentence(BaseModel):
    features: FrozenSet[str]
    stars: int = Field(ge=1, le=5)
    votes: int = Field(ge=0)
    compound: float = 0.0


class FeatureAccumulator(BaseModel):
    cumulative: int = 0
    weight_total: int = 0
    mention_count: int = 0


class FeatureRating(BaseModel):
    feature: str
    cumulative: int = Field(ge=0)
    weight_total: int = Field(ge=1)
    final: float = Field(ge=1.0, le=5.0)
    mention_count: int = Field(ge=1)

    @model_validator(mode="after")
    def _consistent(self) -> "FeatureRating":
        if self.weight_total < self.mention_count:
            raise ValueError(f"feature '{self.feature}' has less weight than mentions")
        if not math.isclose(self.final, self.cumulative / self.weight_total, rel_tol=1e-12):
            raise ValueError(f"feature '{self.feature}' final rating is not cumulative/weight")
        return self


class ProductRatings(BaseModel):
    product_name: str
    ratings: Dict[str, FeatureRating] = Field(default_factory=dict)
    review_count: int = 0
    review_votes: int = 0


# --- rank / eval ------------------------------------------------------------


class ProductRank(BaseModel):
    rank: int = Field(ge=1)
    product_name: str
    best_feature_count: int = Field(ge=0)
    tiebreak_votes: int = 0
    best_features: List[str] = Field(default_factory=list)


class Recommendation(BaseModel):
    feature: str
    product_name: str
    rating: float
    rank: int


class EvalReport(BaseModel):
    feature: str = "phone"
    n: int = 0
    mse: float = 0.0
    rmse: float = 0.0
    mae: float = 0.0
    exact_accuracy: float = 0.0
    within_one_accuracy: float = 0.0
    confusion: List[List[int]] = Field(default_factory=lambda: [[0] * 5 for _ in range(5)])

    @model_validator(mode="after")
    def _consistent(self) -> "EvalReport":
        if len(self.confusion) != 5 or any(len(row) != 5 for row in self.confusion):
            raise ValueError("confusion matrix must be 5x5")
        if sum(map(sum, self.confusion)) != self.n:
            raise ValueError("confusion matrix entries do not sum to n")
        if self.mae > self.rmse * (1.0 + 1e-9) + 1e-12:
            raise ValueError("mae exceeds rmse")
        return self


class FeatureDistribution(BaseModel):
    feature: str
    counts: List[int] = Field(min_length=5, max_length=5)

    @property
    def rated_products(self) -> int:
        return sum(self.counts)
