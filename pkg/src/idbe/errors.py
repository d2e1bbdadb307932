"""Exception hierarchy shared by every stage of the toolkit."""


class IdbeError(Exception):
    """Base class for all errors raised by this package."""


# -- dictionary -------------------------------------------------------------

class CodeSpaceExhaustedError(IdbeError, ValueError):
    pass


class DictionaryFormatError(IdbeError, ValueError):
    """A dictionary file could not be parsed."""


class MalformedHeaderError(DictionaryFormatError):
    pass


class CountMismatchError(DictionaryFormatError):
    pass


class DuplicateWordError(DictionaryFormatError):
    pass


class IllegalCharacterError(DictionaryFormatError):
    pass


class ChecksumMismatchError(DictionaryFormatError):
    pass


# -- transforms -------------------------------------------------------------

class CorruptStreamError(IdbeError, ValueError):
    """A transformed byte stream cannot be inverted."""


class TruncatedCodeError(CorruptStreamError):
    pass


class UnknownCodeError(CorruptStreamError):
    pass


class DanglingMarkerError(CorruptStreamError):
    pass


class GroupFullError(IdbeError, ValueError):
    pass


class PatternNotFoundError(CorruptStreamError):
    pass


class DanglingEscapeError(CorruptStreamError):
    pass


# -- backend / container ----------------------------------------------------

class CorruptPayloadError(IdbeError, ValueError):
    """Entropy-coded payload is damaged or lacks its end-of-block symbol."""


class ContainerError(IdbeError, ValueError):
    """Base for container parse failures. ``offset`` locates the problem."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (at byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class BadMagicError(ContainerError):
    pass


class VersionMismatchError(ContainerError):
    pass


class DictionaryMismatchError(ContainerError):
    pass


class CorruptBlockError(ContainerError):
    pass


class MissingDictionaryError(IdbeError, ValueError):
    pass


class RoundTripError(IdbeError):
    """Decompressed output differed from the original input."""
