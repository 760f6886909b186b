"""Exception types shared across the package."""


class DepthError(ValueError):
    """Not enough data (moments, coefficients, polynomials) for the request."""


class DomainError(ValueError):
    """A parameter or derived quantity lies outside the operation's domain."""


class ContractError(ValueError):
    """The caller violated an operation's contract, e.g. passed a degenerate
    relation to a checker that only accepts non-degenerate ones."""


class FormatError(ValueError):
    """Malformed serialized input: bad rational string, wrong JSON shape, or
    violated index conventions."""
