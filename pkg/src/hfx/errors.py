"""Error hierarchy. Every exception carries a stable E_* code used by the CLI."""


class HfxError(Exception):
    """Base class; ``code`` is the machine-readable error class."""

    code = "E_ERROR"

    def __str__(self):
        return super().__str__() or self.code


class BasisError(HfxError):
    """An element references a basis symbol the presentation does not declare."""

    code = "E_BASIS"


class IndexError_(HfxError):
    """An undeclared object / cell name was used as a tensor index."""

    code = "E_INDEX"


class MismatchError(HfxError):
    """Two structures that must share a base category do not."""

    code = "E_MISMATCH"


class SigmaError(HfxError):
    """The object involution violates one of its preconditions."""

    code = "E_SIGMA"


class CellError(HfxError):
    """Inconsistent 1-cell data (endpoints, degrees, name collisions)."""

    code = "E_CELL"


class GroupError(HfxError):
    """A multiplication table fails the group laws."""

    code = "E_GROUP"


class UnitError(HfxError):
    """A fusion table violates the unit row/column pattern."""

    code = "E_UNIT"


class NameError_(HfxError):
    """Unknown catalog entry name."""

    code = "E_NAME"


class ParseError(HfxError):
    """Malformed input file; carries a 1-based line number when known."""

    code = "E_PARSE"

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class RangeError(HfxError):
    """An integer is outside its allowed range (negative count, dim < 1, ...)."""

    code = "E_RANGE"

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
