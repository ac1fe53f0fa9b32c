"""Exception types shared across the package."""


class TGKError(Exception):
    pass


class ParseError(TGKError, ValueError):
    """Malformed table / graph text. Carries 1-based line and column."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class NotTravelError(TGKError, ValueError):
    """Operation needs a travel groupoid and got something else."""


class ConfusingError(TGKError, ValueError):
    """Operation needs a non-confusing travel groupoid."""


class DisconnectedGraphError(TGKError, ValueError):
    pass


class InvalidTreeError(TGKError, ValueError):
    pass


class NoTravelGroupoidError(TGKError, ValueError):
    """The requested graph carries no travel groupoid at all."""


class CensusTooLarge(TGKError, RuntimeError):
    def __init__(self, predicted, ceiling):
        self.predicted = predicted
        self.ceiling = ceiling
        super().__init__(
            f"predicted census {predicted} exceeds ceiling {ceiling}; "
            "raise the ceiling or force the run"
        )
