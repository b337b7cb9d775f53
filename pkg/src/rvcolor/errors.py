"""Exception hierarchy shared by every module."""


class RVCError(Exception):
    """Base class for all errors raised by rvcolor."""


class InvalidArgumentError(RVCError, ValueError):
    """An argument violates an operation's precondition."""


class DisconnectedGraphError(RVCError):
    """The operation needs a connected graph."""


class ContractError(RVCError):
    """An internal guarantee failed; indicates a bug or a broken input contract."""


class ResampleCapExceeded(RVCError):
    def __init__(self, resamples: int, cap: int):
        super().__init__(f"resampling did not converge within {cap} steps")
        self.resamples = resamples
        self.cap = cap


class StrategyInapplicable(RVCError):
    """A coloring strategy cannot run on the given input."""


class CertificateError(RVCError):
    def __init__(self, pair, reason: str):
        super().__init__(f"no certificate path for {pair}: {reason}")
        self.pair = pair
        self.reason = reason
