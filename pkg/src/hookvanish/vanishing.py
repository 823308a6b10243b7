"""Vanishing criteria for Dolbeault cohomology of hook Schur functors.

Two criteria are implemented.  ``ample_hook`` assumes ``E`` ample and bounds
``H^{p,q}(X, Gamma^alpha_k E)`` through ``delta(n - p)``.  ``schur_ample``
assumes the staircase functor ``S_{I(l,m,s)} E`` ample, needs one of four
side conditions, and then covers both ``H^{p,q}`` and ``H^{q,p}``.

The products written ``ra`` in the side conditions are read as ``r * alpha``.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from math import comb

from .errors import OutOfRange
from .partitions import Partition, delta, staircase_partition

AMPLE_HOOK = "ample_hook"
SCHUR_AMPLE = "schur_ample"
NONE = "none"

REPORT_SCHEMA = "hookvanish.vanish/1"


def _check_hook(alpha: int, k: int) -> None:
    if k < 1 or not 0 <= alpha < k:
        raise OutOfRange(f"need 0 <= alpha < k, got alpha={alpha}, k={k}")


def _check_bidegree(n: int, p: int) -> None:
    if n < 1 or not 0 <= p <= n:
        raise OutOfRange(f"need 0 <= p <= n with n >= 1, got p={p}, n={n}")


def thm21_threshold(n: int, p: int, alpha: int, e: int, k: int) -> int:
    """Vanishing for ample ``E`` holds once ``q + p - n`` exceeds this value."""
    _check_bidegree(n, p)
    _check_hook(alpha, k)
    return (delta(n - p) + alpha) * (e - k + 2 * alpha) - alpha * (alpha + 1)


def thm22_threshold(r: int, alpha: int, e: int, k: int) -> int:
    if r < 1:
        raise OutOfRange(f"r must be positive, got {r}")
    _check_hook(alpha, k)
    return (r + alpha) * (e - k + alpha) + alpha * (r - 1)


@dataclass(frozen=True)
class ConditionFlags:
    r: int
    beta: int
    cond_m1: bool
    cond_alpha0: bool
    cond_alpha_ge1: bool
    cond_k_gt_e1: bool

    def any(self) -> bool:
        return self.cond_m1 or self.cond_alpha0 or self.cond_alpha_ge1 or self.cond_k_gt_e1

    def as_list(self) -> list[bool]:
        return [self.cond_m1, self.cond_alpha0, self.cond_alpha_ge1, self.cond_k_gt_e1]


def thm22_conditions(n: int, p: int, e: int, k: int, m: int, alpha: int) -> ConditionFlags:
    _check_bidegree(n, p)
    _check_hook(alpha, k)
    staircase_partition(k, m)  # raises TooSmall when k < m
    if e < 1:
        raise OutOfRange(f"rank must be positive, got {e}")
    d = n - p
    r = delta(d + comb(m, 2))
    beta = k - e

    cond_alpha0 = alpha == 0 and (r - 1) * k > r * (d - 1)

    kron = int(alpha == 2 and m == 2 and d == 1)
    cond_alpha_ge1 = alpha >= 1 and (
        (r + alpha - 2) * k > (r + alpha - 1) * (d + r * alpha + comb(alpha, 2) - 1) + kron
    )

    cond_k_gt_e1 = k > e + 1 and (
        (r + alpha - beta - 1) * k
        > (r + alpha - beta) * (d + r * alpha + comb(alpha, 2) - comb(beta, 2) - 1)
    )
    return ConditionFlags(r, beta, m == 1, cond_alpha0, cond_alpha_ge1, cond_k_gt_e1)


@dataclass(frozen=True)
class VanishingQuery:
    n: int
    e: int
    k: int
    m: int
    alpha: int
    p: int
    q: int

    def __post_init__(self):
        if min(self.n, self.e, self.k, self.m) < 1:
            raise OutOfRange(f"n, e, k, m must be positive: {self}")
        if not (0 <= self.p <= self.n and 0 <= self.q <= self.n):
            raise OutOfRange(f"need 0 <= p, q <= n: {self}")
        _check_hook(self.alpha, self.k)


@dataclass
class VanishingReport:
    query: VanishingQuery
    hypothesis_partition: Partition
    gamma_nonzero: bool
    flags: ConditionFlags | None
    threshold: int | None
    guaranteed_pq: bool
    guaranteed_qp: bool
    theorem_used: str
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "schema": REPORT_SCHEMA,
            "query": asdict(self.query),
            "hypothesis_partition": str(self.hypothesis_partition),
            "gamma_nonzero": self.gamma_nonzero,
            "r": None if self.flags is None else self.flags.r,
            "conditions": None if self.flags is None else self.flags.as_list(),
            "threshold": self.threshold,
            "guaranteed_pq": self.guaranteed_pq,
            "guaranteed_qp": self.guaranteed_qp,
            "theorem": self.theorem_used,
            "notes": list(self.notes),
        }


def evaluate(query: VanishingQuery) -> VanishingReport:
    """Decide which vanishing statements the two criteria guarantee for ``query``.

    ``False`` in the report means "not guaranteed", never "non-zero".
    """
    n, e, k, m, alpha, p, q = (query.n, query.e, query.k, query.m, query.alpha, query.p, query.q)
    _, _, hyp = staircase_partition(k, m)

    if e - k + alpha < 0:
        return VanishingReport(
            query, hyp, False, None, None, True, True, NONE,
            ["Gamma^alpha_k E = 0 since e - k + alpha < 0; every cohomology group vanishes"],
        )

    notes = ["products 'ra' in the side conditions are read as r*alpha"]
    excess = q + p - n
    if p == 0:
        # the staircase criterion needs 0 < p; only the ample criterion remains
        notes.append("p = 0: the staircase criterion does not apply")
        if m != 1:
            return VanishingReport(query, hyp, True, None, None, False, False, NONE, notes)
        r = delta(n)
        flags = ConditionFlags(r, k - e, True, False, False, False)
        threshold = thm21_threshold(n, p, alpha, e, k)
        ok = excess > threshold
        notes.append("ample criterion covers H^{p,q} only")
        return VanishingReport(query, hyp, True, flags, threshold, ok, False, AMPLE_HOOK, notes)

    flags = thm22_conditions(n, p, e, k, m, alpha)
    threshold = thm22_threshold(flags.r, alpha, e, k)
    ok = flags.any() and excess > threshold
    if m == 1:
        notes.append("m = 1: hypothesis is E ample; threshold agrees with the ample criterion")
    return VanishingReport(query, hyp, True, flags, threshold, ok, ok, SCHUR_AMPLE if flags.any() else NONE, notes)
