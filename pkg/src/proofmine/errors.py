"""Exception types shared across the toolkit."""

from __future__ import annotations


class ProofMineError(Exception):
    """Base class for every error this package raises deliberately."""


class ParseError(ProofMineError):
    """Malformed input text; carries line/column (1-based) when known."""

    def __init__(self, message: str, line: int | None = None,
                 column: int | None = None, filename: str | None = None):
        self.message = message
        self.line = line
        self.column = column
        self.filename = filename
        super().__init__(str(self))

    def __str__(self) -> str:
        where = []
        if self.filename:
            where.append(self.filename)
        if self.line is not None:
            where.append(str(self.line))
        if self.column is not None:
            where.append(str(self.column))
        prefix = ":".join(where)
        return f"{prefix}: {self.message}" if prefix else self.message


class NegativeSubgoals(ParseError):
    """A proof step annotation declared a negative subgoal count."""


class ArityError(ProofMineError):
    """A functor or predicate name was used at two different arities."""


class DuplicateLemma(ProofMineError):
    """Two lemma statements share one name."""


class InsufficientData(ProofMineError):
    """Not enough proved lemmas for the requested operation."""


class EmptyTrainingSet(ProofMineError):
    """A classifier was asked to train on zero examples."""


class DimensionMismatch(ProofMineError):
    """Vector and classifier disagree on the feature-space size."""


class EmptyModel(ProofMineError):
    """A premise model with no classifiers cannot rank anything."""


class UnknownSymbol(ProofMineError):
    """A proof step refers to a name missing from the corpus tables."""


class BadGranularity(ProofMineError):
    """Granularity outside the supported 1..5 range."""


class BadK(ProofMineError):
    """Cluster count outside 1..n for the given dataset."""


class DegenerateData(ProofMineError):
    """Dataset cannot support the requested fit (e.g. all points equal)."""


class EmptyDataset(ProofMineError):
    """An operation that needs at least one vector got none."""


class BadModel(ProofMineError):
    """A cluster model is unusable for the requested computation."""


class VersionError(ProofMineError):
    """Persisted model has an unsupported format version."""


class CorruptModel(ProofMineError):
    """Persisted model failed structural or checksum validation."""
