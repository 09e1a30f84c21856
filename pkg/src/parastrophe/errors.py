"""Error taxonomy shared by the library and the command line.

Every error carries a short ``code`` so the CLI can print a single
machine-parsable line (``error: <code>: <message>``).
"""


class LatinError(Exception):
    code = "LatinError"


class DegreeMismatch(LatinError, ValueError):
    code = "DegreeMismatch"


class InvalidPermutation(LatinError, ValueError):
    code = "InvalidPermutation"


class NotSquare(LatinError, ValueError):
    code = "NotSquare"


class EntryOutOfRange(LatinError, ValueError):
    code = "EntryOutOfRange"

    def __init__(self, i, j, value):
        self.i, self.j, self.value = i, j, value
        super().__init__(f"entry {value!r} at ({i},{j}) is outside 1..n")


class RowDuplicate(LatinError, ValueError):
    code = "RowDuplicate"

    def __init__(self, i):
        self.i = i
        super().__init__(f"row {i} repeats a symbol")


class ColumnDuplicate(LatinError, ValueError):
    code = "ColumnDuplicate"

    def __init__(self, j):
        self.j = j
        super().__init__(f"column {j} repeats a symbol")


class IndexOutOfRange(LatinError, IndexError):
    code = "IndexOutOfRange"


class O1Violation(LatinError, ValueError):
    code = "O1Violation"


class O2Violation(LatinError, ValueError):
    code = "O2Violation"


class O3Violation(LatinError, ValueError):
    code = "O3Violation"

    def __init__(self, col1, col2):
        self.col1, self.col2 = col1, col2
        super().__init__(f"columns {col1} and {col2} agree in more than one position")


class TagError(LatinError, ValueError):
    code = "TagError"


class OrderTooSmall(LatinError, ValueError):
    code = "OrderTooSmall"


class OrderUnsupported(LatinError, ValueError):
    code = "OrderUnsupported"


class ParseError(LatinError, ValueError):
    code = "ParseError"

    def __init__(self, line, msg=""):
        self.line = line
        super().__init__(f"line {line}: {msg}" if msg else f"line {line}")


class ValidationError(LatinError, ValueError):
    code = "ValidationError"

    def __init__(self, line, underlying):
        self.line = line
        self.underlying = underlying
        super().__init__(f"line {line}: {underlying.code}: {underlying}")
