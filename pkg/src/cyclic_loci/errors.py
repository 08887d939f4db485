"""Exception hierarchy.

User-facing input problems derive from :class:`HurwitzError` (a
``ValueError``); failures that can only come from a bug derive from
:class:`ConsistencyFailure`.
"""


class HurwitzError(ValueError):
    pass


class InvalidOrder(HurwitzError):
    """The cyclic order is not an integer >= 2."""


class InvalidDatum(HurwitzError):
    """Exponents out of range, not sorted, or not summing to zero mod n."""


class InvalidMarking(HurwitzError):
    """A marking vector asks for more branch orbits than the datum has."""


class NotAUnit(HurwitzError):
    pass


class NegativeGenus(HurwitzError):
    pass


class NotHyperbolic(HurwitzError):
    pass


class EmptyInertia(HurwitzError):
    """No branch exponents: the inertia constraints pin nothing."""


class DivisorError(HurwitzError):
    """Malformed Kummer divisor (repeated label, zero multiplicity, nonzero degree)."""


class ConsistencyFailure(RuntimeError):
    """An internal cross-check disagreed. Never expected on a correct build."""

    def __init__(self, message, counterexample=None):
        super().__init__(message)
        self.counterexample = counterexample

    def __reduce__(self):
        return (type(self), (str(self), self.counterexample))


class NonIntegralGenus(ConsistencyFailure):
    pass


class OddEulerCharacteristic(ConsistencyFailure):
    pass
