"""Exception types shared across the package."""


class RittLabError(Exception):
    """Base class for all errors raised by this package."""


class CapExceeded(RittLabError):
    """A closure or enumeration would exceed its configured size cap."""


class FormatError(RittLabError):
    """Malformed input text (group/context/polynomial/skew files)."""


class FieldMismatch(RittLabError):
    """Operands live over different coefficient fields."""


class WildCharacteristic(RittLabError):
    """The field characteristic divides the degree; the tame machinery does not apply."""


class NotAdditive(RittLabError):
    """A polynomial claimed to be additive has an exponent that is not a power of p."""


class NotPermutable(RittLabError):
    """JH != HJ, so the product set is not a subgroup."""


class HypothesisFailed(RittLabError):
    """A verifier's group-theoretic hypothesis does not hold for the given context."""


class NotMaximal(RittLabError):
    """A chain passed to the exchange walk is not maximal."""


class NotIndecomposable(RittLabError):
    """The context has proper intermediate subgroups."""


class TheoremViolated(RittLabError):
    """A verified theorem failed on concrete data.  Must never fire; if it does,
    the witness it carries is a build-breaking counterexample."""


class BadPrime(RittLabError):
    """The prime does not satisfy the congruence conditions of the construction."""


class BadLeadingCoefficient(RittLabError):
    """c**n does not equal the leading coefficient, so no branch starts at c."""


class NotAPolynomialComposite(RittLabError):
    """The rational factors do not compose to the given polynomial, or infinity
    has several preimages at some stage."""


class DegenerateResult(RittLabError):
    """A composition of rational functions collapsed to a constant."""


class InternalInconsistency(RittLabError):
    """An internal exactness check failed; indicates a bug, not bad input."""
