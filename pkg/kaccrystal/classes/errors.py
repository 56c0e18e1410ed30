class HookViolation(ValueError):
    """Partition is not an (m|n)-hook partition."""


class NotDominant(ValueError):
    pass


class RankMismatch(ValueError):
    pass


class ShapeViolation(ValueError):
    pass


class ColorOutOfRange(ValueError):
    pass


class WeightFormatError(ValueError):
    """Malformed weight, partition or letter text.

    `position` is the character offset of the offending token, or None.
    """

    def __init__(self, message, text=None, position=None):
        if position is not None:
            message = f"{message} at position {position}: {text!r}"
        super().__init__(message)
        self.text = text
        self.position = position


class InsertionOverflow(ValueError):
    pass


class NotInImage(ValueError):
    pass


class PreconditionViolated(ValueError):
    pass


class MalformedHookTableau(ValueError):
    pass


class SizeCapExceeded(RuntimeError):
    def __init__(self, cardinality, cap):
        super().__init__(f"crystal has {cardinality} vertices, cap is {cap}")
        self.cardinality = cardinality
        self.cap = cap


class NotIsomorphic(ValueError):
    def __init__(self, message, edge=None):
        super().__init__(message if edge is None else f"{message}: {edge!r}")
        self.edge = edge


class MultipleSources(ValueError):
    def __init__(self, sources):
        super().__init__(f"graph has {len(sources)} sources, expected one")
        self.sources = sources
