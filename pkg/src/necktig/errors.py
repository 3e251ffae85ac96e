"""Exception hierarchy shared by every stage of the pipeline."""


class NecktigError(Exception):
    """Base class for all errors raised by this package."""


class FastaParseError(NecktigError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class InvalidParameterError(NecktigError, ValueError):
    pass


class EmptySpectrumError(NecktigError):
    """Raised when no k-mer survives extraction, or a graph is built from nothing."""


class PreconditionError(NecktigError):
    pass


class InvariantViolation(NecktigError, RuntimeError):
    """An internal guarantee was broken; indicates a bug or a corrupted input."""


class EncodingError(NecktigError):
    pass


class DecodeError(NecktigError):
    pass


class UnbalancedParenthesesError(DecodeError):
    pass


class DuplicateKmerError(DecodeError):
    pass


class InvalidSymbolError(DecodeError):
    pass


class OracleSizeError(NecktigError):
    """Brute-force oracles refuse graphs above their size guard."""
