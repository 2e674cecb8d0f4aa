"""Exception types shared across the package."""


class TypecompError(Exception):
    """Base class for all package errors."""


class ConfigError(TypecompError):
    """Invalid or inconsistent configuration values."""


class ContractError(TypecompError):
    """A caller violated an operation precondition."""


class CorpusFormatError(TypecompError):
    """Malformed corpus file (e.g. code/type line length mismatch)."""


class VocabError(TypecompError):
    """Invalid vocabulary content or out-of-range token id."""


class AlignmentError(TypecompError):
    """Code/type alignment cannot be constructed."""


class ShapeError(TypecompError):
    """Tensor shapes incompatible for the requested operation."""
