"""Exception types shared across the package."""


class ZeroModeError(ValueError):
    """A thermodynamic function was called with a non-positive frequency.

    The center-of-mass mode has omega = 0 and carries no Gibbs weight; its
    geometric occupation series diverges, so it must never reach the
    per-mode partition machinery.
    """


class CutoffTooSmallError(ValueError):
    """Truncated Fock space leaves too much occupation mass above the cutoff."""


class ConvergenceError(RuntimeError):
    """Iterative solver exhausted its iteration budget (diagnostic)."""


class DistinctOperatorsError(ValueError):
    """Two decompositions do not share a state operator.

    Distinguishability of distinct operators is expected and outside the
    scope of the indistinguishability check.
    """
