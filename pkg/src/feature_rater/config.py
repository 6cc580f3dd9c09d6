from __future__ import annotations

import os
from importlib import resources
from pathlib import Path
from typing import List, Literal, Optional

from pydantic import BaseModel, Field, model_validator

from .schemas import GroundTruthWeights, HeuristicConfig, OutputFormat

DATA_DIR_ENV = "FEATRATE_DATA_DIR"

FEATURE_LEXICON_FILE = "feature_lexicon.txt"
EMOTICONS_FILE = "emoticons.txt"
SENTIMENT_LEXICON_FILE = "sentiment_lexicon.txt"
BOOSTERS_FILE = "boosters.txt"
NEGATORS_FILE = "negators.txt"
WORD_FREQUENCIES_FILE = "word_frequencies.txt"

LogLevel = Literal["DEBUG", "INFO", "WARNING", "ERROR"]


def data_dir() -> Path:
    """Directory holding the bundled data files; ``FEATRATE_DATA_DIR`` wins when set."""
    override = os.environ.get(DATA_DIR_ENV)
    if override:
        return Path(override)
    return Path(str(resources.files("feature_rater").joinpath("data")))


def bundled_file(name: str) -> Optional[Path]:
    """Path of a bundled data file, or ``None`` when the data directory lacks it."""
    candidate = data_dir() / name
    return candidate if candidate.is_file() else None


class ColumnMapping(BaseModel):
    product: str = "Product Name"
    brand: Optional[str] = "Brand Name"
    price: Optional[str] = "Price"
    rating: str = "Rating"
    reviews: str = "Reviews"
    votes: str = "Review Votes"

    def required(self) -> List[str]:
        columns = [self.product, self.rating, self.reviews, self.votes]
        columns += [col for col in (self.brand, self.price) if col is not None]
        return columns


class RunConfig(BaseModel):
    input: Path
    columns: ColumnMapping = Field(default_factory=ColumnMapping)
    lexicon: Optional[Path] = None
    sentiment_lexicon: Optional[Path] = None
    sentiment_boosters: Optional[Path] = None
    sentiment_negators: Optional[Path] = None
    emoticons: Optional[Path] = None
    dictionary: Optional[Path] = None
    heuristics: HeuristicConfig = Field(default_factory=HeuristicConfig)
    strict_eq4: bool = False
    gt_weights: GroundTruthWeights = "votes-plus-one"
    min_fraction: float = Field(default=0.0002, ge=0.0, le=1.0)
    min_best: int = Field(default=0, ge=0)
    feature: str = "phone"
    format: OutputFormat = "csv"
    out: Optional[Path] = None
    workers: int = Field(default=1, ge=1)
    cache: Optional[Path] = None
    progress: bool = True
    log_level: LogLevel = "INFO"

    @model_validator(mode="after")
    def _paths_exist(self) -> "RunConfig":
        self.input = self.input.expanduser().resolve()
        if not self.input.is_file():
            raise ValueError(f"input file '{self.input}' does not exist")
        for name in (
            "lexicon",
            "sentiment_lexicon",
            "sentiment_boosters",
            "sentiment_negators",
            "emoticons",
            "dictionary",
        ):
            path: Optional[Path] = getattr(self, name)
            if path is None:
                continue
            path = path.expanduser().resolve()
            if not path.is_file():
                raise ValueError(f"{name.replace('_', ' ')} file '{path}' does not exist")
            setattr(self, name, path)
        if self.out is not None:
            self.out = self.out.expanduser().resolve()
        if self.cache is not None:
            self.cache = self.cache.expanduser().resolve()
        return self
