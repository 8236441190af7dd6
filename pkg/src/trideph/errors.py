"""Exception types raised on numerical-contract violations."""


class ContractError(ValueError):
    """An input or result violates a numerical contract (shape, Hermiticity,
    trace, positivity, parameter range)."""


class ChannelContractError(ContractError):
    """A channel produced a non-positive state, signalling invalid
    channel parameters."""
