"""Exception hierarchy shared by every module of the package."""


class HookVanishError(ValueError):
    """Base class for all input and domain errors raised by the package."""


class NotWeaklyDecreasing(HookVanishError):
    pass


class NegativePart(HookVanishError):
    pass


class OutOfRange(HookVanishError):
    pass


class TooSmall(HookVanishError):
    pass


class ZeroPartition(HookVanishError):
    pass


class RankMismatch(HookVanishError):
    pass


class LengthExceedsRank(HookVanishError):
    pass


class OracleTooLarge(HookVanishError):
    """An enumeration would exceed a configured guard (see ``hookvanish.config``)."""


class DegenerateFlag(HookVanishError):
    """The flag data ``l = k // r`` vanishes, so the flag manifold is not defined."""
