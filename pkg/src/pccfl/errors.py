"""Exception types shared across the package."""


class PccflError(Exception):
    """Base class for all errors raised by this package."""


class GrammarError(PccflError, ValueError):
    """Malformed grammar text or an invalid grammar construction."""


class NotTransitiveError(PccflError, ValueError):
    """Dependence is not transitive, so threads are undefined.

    ``witness`` is a triple ``(X, Y, Z)`` with ``{X, Y}`` and ``{Y, Z}``
    dependent but ``{X, Z}`` independent.
    """

    def __init__(self, witness):
        self.witness = tuple(witness)
        x, y, z = self.witness
        super().__init__(
            f"dependence is not transitive: ({x},{y}) and ({y},{z}) are "
            f"dependent but ({x},{z}) is not"
        )


class UnknownLetterError(PccflError, ValueError):
    def __init__(self, letters):
        self.letters = tuple(sorted(set(letters)))
        super().__init__(f"letters outside the alphabet: {', '.join(self.letters)}")


class EmptyWordError(PccflError, ValueError):
    def __init__(self):
        super().__init__("the empty word is never generated by a Greibach grammar")


class BudgetExhausted(PccflError):
    """A search visited more states than its budget allows."""

    def __init__(self, budget, what="search"):
        self.budget = budget
        super().__init__(f"{what} exceeded its budget of {budget} states")


class DerivationError(PccflError, ValueError):
    def __init__(self, index, message):
        self.index = index
        super().__init__(f"step {index}: {message}")


class TreeError(PccflError, ValueError):
    """Ill-formed derivation tree or certificate."""


class MpdaError(PccflError, ValueError):
    """Ill-formed multi-pushdown automaton."""
