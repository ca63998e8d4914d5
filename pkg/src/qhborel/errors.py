"""Exception hierarchy shared by every qhborel module."""


class QhError(Exception):
    """Base class for all errors raised by qhborel."""


class InputError(QhError):
    """Malformed input: bad shapes, unknown labels, schema failures."""


class UnknownLabel(InputError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class CycleError(InputError):
    """The generating relations do not close up to an antisymmetric order."""


class DimensionMismatch(InputError):
    pass


class SchemaError(InputError):
    pass


class ShapeError(QhError, ValueError):
    pass


class NotUnitriangular(QhError, ValueError):
    pass


class NonPositiveK(QhError, ValueError):
    pass


class InvalidSpec(QhError, ValueError):
    pass


class NotATree(InvalidSpec):
    pass


class InvalidData(QhError):
    """Raised when an operation requiring valid data receives violations."""

    def __init__(self, violations):
        self.violations = list(violations)
        first = self.violations[0] if self.violations else None
        super().__init__(f"{len(self.violations)} violation(s); first: {first}")


class NotRealizable(QhError):
    """The data cannot come from any quasihereditary algebra."""


class DivisibilityError(QhError):
    def __init__(self, i, j, hom, k):
        self.i, self.j, self.hom, self.k = i, j, hom, k
        super().__init__(
            f"dim L_{j}^B = {k} does not divide dim Hom(Delta_{j}, Delta_{i}) = {hom}"
        )
