from __future__ import annotations


class FeatureRaterError(Exception):
    """Base class for every error raised by feature_rater."""


class CorpusLoadError(FeatureRaterError, ValueError):
    """The review file could not be read or lacks a mapped column."""


class LexiconError(FeatureRaterError, ValueError):
    """A lexicon or word-list file violates its format or disjointness rules."""


class NotFoundError(FeatureRaterError, LookupError):
    """A requested feature or record set has nothing to work with."""


class ContractViolation(FeatureRaterError, ValueError):
    """An internal precondition was broken by the caller."""
