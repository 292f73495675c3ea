"""Exception types shared across the toolkit.

Data and configuration problems raise plain ``RepalError`` subclasses;
encoder and transport failures derive from ``EncoderError`` so callers
(notably the CLI exit-code mapping) can tell the two families apart.
"""


class RepalError(Exception):
    """Base class for all toolkit errors."""


class DimensionMismatch(RepalError):
    """Vectors (or matrix rows) disagree on dimension."""


class ZeroVector(RepalError):
    """A direction was required from a vector of (near-)zero norm."""


class EmptyMatrix(RepalError):
    """An operation needs more rows than the matrix has."""


class NoConvergence(RepalError):
    """Iterative solve exhausted its budget; carries the last estimate."""

    def __init__(self, message, last_estimate):
        super().__init__(f"{message} (last estimate {last_estimate!r})")
        self.last_estimate = last_estimate


class EmptyInput(RepalError):
    """Blank text, or an empty batch, where content is required."""


class EmptyCorpus(RepalError):
    """A corpus-level statistic was requested over zero sentences."""


class IndexOutOfRange(RepalError):
    """A token position does not exist in the sentence."""


class SentenceTooShort(RepalError):
    """The sentence has too few tokens for the requested analysis."""


class ParseError(RepalError):
    """A line of an input file could not be parsed."""

    def __init__(self, line, reason):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class TooFewPairs(RepalError):
    """Fewer than two scored pairs; rank correlation is undefined."""


class LengthMismatch(RepalError):
    """Paired sequences differ in length (or are too short to rank)."""


class DegenerateRanking(RepalError):
    """A constant input admits no ranking."""


class BadGridSpec(RepalError):
    """A grid specification string or value set is malformed."""


class NoEligiblePairs(RepalError):
    """Every candidate pair was skipped; no ratios to average."""


class EncoderError(RepalError):
    """Base class for encoder and transport failures."""


class MissingEmbedding(EncoderError):
    """The file store has no vector for a requested text."""

    def __init__(self, text_hash):
        super().__init__(f"no stored embedding for text hash {text_hash}")
        self.text_hash = text_hash


class RemoteUnavailable(EncoderError):
    """The embedding service failed, or kept failing after retries."""


class DimMismatch(EncoderError):
    """The embedding service broke its dimension contract."""
