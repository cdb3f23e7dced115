"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class StarStarError(DomainError):
    """A family of r-subsets has two members meeting in more than r - 2 elements."""

    def __init__(self, first, second, size, r):
        self.first = first
        self.second = second
        self.size = size
        self.r = r
        super().__init__(
            f"pair {_fmt(first)}, {_fmt(second)} meets in {size} > r-2 = {r - 2} elements"
        )


class AxiomError(ValueError):
    """A basis family fails the exchange axiom.

    ``witness`` is the triple ``(b1, b2, x)`` with ``x`` in ``b1 - b2`` such
    that no ``y`` in ``b2 - b1`` makes ``(b1 - {x}) | {y}`` a basis. Subsets are
    bitmasks, ``x`` is a 1-based element label.
    """

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


def _fmt(mask):
    from .subsets import elements

    return "{" + ",".join(map(str, elements(mask))) + "}"
