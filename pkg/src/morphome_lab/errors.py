"""Exception hierarchy shared across the pipeline.

Three broad families map onto CLI exit codes: configuration problems (2),
data problems (3), and numerical failures (4).
"""

from __future__ import annotations


class MorphomeLabError(Exception):
    """Base class for all package errors."""


class ConfigError(MorphomeLabError):
    """Malformed or inconsistent configuration."""


class DataError(MorphomeLabError):
    """Invalid, missing, or inconsistent data artifacts."""


class NumericalError(MorphomeLabError):
    """A numerical procedure failed (divergence, non-finite values, ...)."""


# --- morpho ---

class UnknownSymbolError(DataError):
    """A glyph is not part of the alphabet."""


class EmptyFormError(DataError):
    """A surface form or stem is empty where a nonempty one is required."""


class MissingAlternantError(DataError):
    """An alternating paradigm was requested without an alternant stem."""


class TagParseError(DataError):
    """A cell-tag token does not follow the <V;MOOD;PRS;P;NUM> format."""


# --- datagen ---

class ExhaustedNamespaceError(DataError):
    """Unique nonce stems could not be generated within the attempt budget."""


class OverlapError(DataError):
    """A held-out test stem leaked into the training lexicon."""


# --- seq2seq ---

class LengthExceededError(DataError):
    """A token sequence is longer than the model's maximum length."""


class UnknownTokenError(DataError):
    """A token or token id is outside the model vocabulary."""


class ShapeMismatchError(NumericalError):
    """Tensor shapes disagree with the expected layout."""


class NonFiniteLossError(NumericalError):
    """Training produced a NaN/inf loss; aborted with diagnostics."""


class CheckpointFormatError(DataError):
    """A checkpoint file is missing fields or has an unsupported version."""


# --- stats ---

class EmptyInputError(DataError):
    """An aggregate was requested over zero records."""


class LengthMismatchError(DataError):
    """Paired samples have different lengths."""


class ConstantInputError(DataError):
    """A correlation is undefined because one input is constant."""


# --- gnm ---

class EmptyLexiconError(DataError):
    """The reference lexicon contains no entries."""


# --- glmm ---

class SeparationError(NumericalError):
    """The response is (quasi-)completely separated; the MLE does not exist."""


class NonConvergenceError(NumericalError):
    """The fit did not converge within the iteration budget."""
