"""Exception hierarchy shared across the package."""


class CubicThetaError(Exception):
    """Base class for all package-specific errors."""


class NotSplitRegular(CubicThetaError):
    """Two roots of the cubic have equal absolute value (rho_i = -rho_j),
    so the element is not conjugate into the open chamber."""


class NotUnit(CubicThetaError):
    """Constant coefficient is not +-1, so the polynomial cannot be the
    characteristic polynomial of a unit."""


class Reducible(CubicThetaError):
    """Polynomial is reducible over the rationals."""


class UndecidableAtBound(CubicThetaError):
    """A chamber comparison still straddles the threshold after precision
    escalation up to the hard cap."""


class SearchExhausted(CubicThetaError):
    """A certified search (units, principality) hit its enumeration cap
    before reaching a decision."""


class BoxTooLarge(CubicThetaError):
    """Projected enumeration count of a lattice box exceeds the configured cap."""


class CapExceeded(CubicThetaError):
    """Input is outside the configured size cap of a desk-scale oracle."""


class NonIntegralResult(CubicThetaError):
    """The conductor class-number formula produced a non-integer; this
    signals an upstream bug and is never caught internally."""


class TailBoundUnavailable(CubicThetaError):
    """Decay metadata needed for a certified quadrature tail bound is missing."""


class QuadratureNotConverged(CubicThetaError):
    """Adaptive quadrature failed to meet the requested error target."""


class DerivativeUnavailable(CubicThetaError):
    """No derivative callback and finite differences were disallowed."""


class IncompleteFactorization(CubicThetaError):
    """The square part of a discriminant could not be fully factored below
    the trial-division bound; the polynomial must be flagged, not guessed."""
