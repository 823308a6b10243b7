"""Integer bookkeeping behind the induction that proves the staircase criterion.

The induction runs over a finite set ``B`` of triples ``(alpha, p, q)``.  Each
triple carries flag data ``(r, l, s)`` and derived scalars, the first page of
a spectral sequence decomposes into hook-functor cohomology with
multiplicities ``n_s(a)``, and every morphism touching the distinguished
summand must land back in ``B`` with a strictly smaller induction variable.
The audits below recheck all of that exhaustively for one parameter set.

Checks are evaluated on the formal values of ``(r, l, s)`` even where
``l = k // r`` is zero or ``r > e`` (no flag manifold exists there) and where
``alpha >= k`` (no hook functor); such triples are tallied under
``info["formal_only"]`` instead of failing.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, floor
from typing import Iterator

from . import config
from .errors import DegenerateFlag, OracleTooLarge, OutOfRange
from .partitions import delta
from .vanishing import thm22_threshold

NEG_INF = float("-inf")
REPORT_SCHEMA = "hookvanish.audit/1"


def sgn(x: int) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class AuditParams:
    n: int
    e: int
    k: int
    m: int
    alpha0: int
    p0: int
    q0: int
    mode: str = "p"

    def __post_init__(self):
        if min(self.n, self.e, self.k, self.m) < 1:
            raise OutOfRange(f"n, e, k, m must be positive: {self}")
        if not (0 <= self.p0 <= self.n and 0 <= self.q0 <= self.n):
            raise OutOfRange(f"need 0 <= p0, q0 <= n: {self}")
        if not 0 <= self.alpha0 < self.k:
            raise OutOfRange(f"need 0 <= alpha0 < k: {self}")
        if self.mode not in ("p", "q"):
            raise OutOfRange(f"mode must be 'p' or 'q', got {self.mode!r}")

    @property
    def deg0(self) -> int:
        """The degree that fixes ``r0``, the cutoff and the induction variable."""
        return self.p0 if self.mode == "p" else self.q0

    @property
    def r0(self) -> int:
        return delta(self.n - self.deg0 + comb(self.m, 2))

    def Q(self, alpha: int) -> int:
        d = alpha - self.alpha0
        return self.r0 * d - comb(abs(d), 2)

    def L(self, alpha: int, deg: int) -> int:
        return 2 * (self.n - deg) + alpha * (2 * (self.r0 + self.alpha0) - alpha)

    def alpha_range(self) -> range:
        return range(max(0, self.k - self.e), self.alpha0 + self.r0 - self.m + 1)

    def in_B(self, alpha: int, p: int, q: int) -> bool:
        if alpha not in self.alpha_range():
            return False
        qa = self.Q(alpha)
        return max(0, self.p0 + qa) <= p <= self.n and max(0, self.q0 + qa) <= q <= self.n


@dataclass(frozen=True)
class TripleB:
    alpha: int
    p: int
    q: int


def enumerate_B(params: AuditParams) -> list[TripleB]:
    out = []
    for alpha in params.alpha_range():
        qa = params.Q(alpha)
        for p in range(max(0, params.p0 + qa), params.n + 1):
            for q in range(max(0, params.q0 + qa), params.n + 1):
                out.append(TripleB(alpha, p, q))
    return out


@dataclass(frozen=True)
class InductionScalars:
    Q: int
    L: int
    A: int
    k_bound: Fraction | float


def induction_scalars(params: AuditParams, alpha: int, deg: int) -> InductionScalars:
    """``Q``, ``L``, ``A`` and the rational bound ``k(alpha)``.

    ``deg`` is ``p`` in p-mode and ``q`` in q-mode; it only enters ``L``.
    """
    r = params.r0 + params.alpha0 - alpha
    if r < 1:
        raise OutOfRange(f"alpha={alpha} gives r={r} < 1")
    qa = params.Q(alpha)
    a = params.n - params.p0 - qa + r * alpha
    k_bound = NEG_INF if r == 1 else (a - 1) * (1 + Fraction(1, r - 1))
    return InductionScalars(qa, params.L(alpha, deg), a, k_bound)


@dataclass(frozen=True)
class FlagGeometry:
    r: int
    l: int
    s: int
    P: int
    chi: int
    sigma: int
    dimY: int
    decomposition_valid: bool

    @property
    def degenerate(self) -> bool:
        return self.l == 0


def flag_geometry(params: AuditParams, alpha: int, p: int, *, formal: bool = False) -> FlagGeometry:
    """Flag data for the induction step at ``(alpha, p)``.

    With ``formal=True`` the formulas are evaluated even when ``l = 0``.
    """
    r = params.r0 + params.alpha0 - alpha
    if r < 1:
        raise OutOfRange(f"alpha={alpha} gives r={r} < 1")
    k, n = params.k, params.n
    l, s = divmod(k, r)
    if l == 0 and not formal:
        raise DegenerateFlag(f"k={k} < r={r}")
    P = p - r * alpha + (l - 1) * comb(r + 1, 2) + r * s - comb(s, 2)
    chi = (l - 1) * comb(r, 2) + r * s - comb(s + 1, 2) - (r - 1) * alpha
    sigma = r * s - comb(s, 2)
    dim_y = n + r * (params.e - r) + s * (r - s)
    valid = r == 1 or k >= n - p + r * alpha + l
    return FlagGeometry(r, l, s, P, chi, sigma, dim_y, valid)


@dataclass(frozen=True)
class MultiplicityTable:
    """``n_s(a)``: coefficient of ``x^a z^s`` in ``prod_{i=1..r} (1 + x^(r+1-i) z)``."""

    r: int
    table: tuple[tuple[int, ...], ...]

    def __call__(self, s: int, a: int) -> int:
        if not 0 <= s <= self.r or not 0 <= a < len(self.table[s]):
            return 0
        return self.table[s][a]

    def sigma(self, s: int) -> int:
        return self.r * s - comb(s, 2)


@lru_cache(maxsize=None)
def ns_table(r: int) -> MultiplicityTable:
    if r < 1:
        raise OutOfRange(f"r must be positive, got {r}")
    if r > config.NS_MAX_R:
        raise OracleTooLarge(f"r={r} exceeds NS_MAX_R={config.NS_MAX_R}")
    top = comb(r + 1, 2)
    # poly[s][a]; multiply in one factor (1 + x^j z) at a time
    poly = [[0] * (top + 1) for _ in range(r + 1)]
    poly[0][0] = 1
    for j in range(1, r + 1):
        for s in range(r, 0, -1):
            row, below = poly[s], poly[s - 1]
            for a in range(top, j - 1, -1):
                row[a] += below[a - j]
    return MultiplicityTable(r, tuple(tuple(row) for row in poly))


@dataclass(frozen=True)
class E1Term:
    beta: int
    q_target: int
    mult: int


def _e1_terms(params: AuditParams, geo: FlagGeometry, alpha: int, p: int, q: int, p_prime: int) -> list[E1Term]:
    table = ns_table(geo.r)
    out = []
    for beta in range(max(0, params.k - params.e), (params.k - 1) // geo.r + 1):
        mult = table(geo.s, geo.sigma + p - p_prime + geo.r * (beta - alpha))
        if mult:
            out.append(E1Term(beta, q + p_prime - p + alpha - beta, mult))
    return out


def e1_terms(params: AuditParams, alpha: int, p: int, q: int, p_prime: int, *, formal: bool = False) -> list[E1Term]:
    """Hook summands ``H^{p', q_target}(Gamma^beta_k)`` of the first-page entry in column ``p'``.

    ``q`` is the row parameter of the page entry.  The decomposition is only
    meaningful when ``geometry.decomposition_valid``; it is computed regardless.
    """
    geo = flag_geometry(params, alpha, p, formal=formal)
    return _e1_terms(params, geo, alpha, p, q, p_prime)


# -- reports ------------------------------------------------------------------

@dataclass
class Check:
    name: str
    cases: int = 0
    witnesses: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.witnesses

    def record(self, ok: bool, alpha: int | None = None, p: int | None = None, q: int | None = None,
               detail: str = "") -> None:
        self.cases += 1
        if not ok:
            self.witnesses.append({"alpha": alpha, "p": p, "q": q, "detail": detail})

    def to_json(self) -> dict:
        return {"name": self.name, "pass": self.passed, "cases": self.cases, "witnesses": self.witnesses}


@dataclass
class AuditReport:
    params: AuditParams
    b_size: int
    checks: list[Check]
    info: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json(self) -> dict:
        return {
            "schema": REPORT_SCHEMA,
            "params": asdict(self.params),
            "r0": self.params.r0,
            "b_size": self.b_size,
            "pass": self.passed,
            "checks": [c.to_json() for c in self.checks],
            "info": self.info,
        }


# -- individual audits ----------------------------------------------------------

def cutoff_check(params: AuditParams) -> Check:
    chk = Check("cutoff")
    beta = params.r0 + params.alpha0 - params.m + 1
    lhs = params.Q(beta) + params.deg0
    chk.record(lhs > params.n, beta, detail=f"Q({beta}) + deg0 = {lhs} vs n = {params.n}")
    return chk


def delta_inequality_check(params: AuditParams) -> Check:
    chk = Check("delta_inequality")
    r0, a0 = params.r0, params.alpha0
    lhs = params.n - params.deg0 + r0 * a0 + comb(a0 + 1, 2)
    rhs = comb(r0 + a0 + 1, 2)
    chk.record(lhs < rhs, a0, detail=f"{lhs} < {rhs}")
    return chk


def helper_inequality_check(params: AuditParams) -> Check:
    chk = Check("helper_q_inequalities")
    alphas = params.alpha_range()
    for alpha in alphas:
        r = params.r0 + params.alpha0 - alpha
        for beta in alphas:
            dq = params.Q(beta) - params.Q(alpha)
            ok_p = dq <= r * (beta - alpha)
            ok_q = dq <= (r - 1) * (beta - alpha) + sgn(beta - alpha)
            chk.record(ok_p and ok_q, alpha, detail=f"beta={beta}: dQ={dq}, p-bound {ok_p}, q-bound {ok_q}")
    return chk


def ns_check(rs) -> Check:
    chk = Check("ns_table")
    for r in sorted(set(rs)):
        table = ns_table(r)
        total = 0
        for s in range(r + 1):
            sigma = table.sigma(s)
            row = table.table[s]
            total += sum(row)
            ok = table(s, sigma) == 1 and all(x == 0 for x in row[sigma + 1:]) and sum(row) == comb(r, s)
            chk.record(ok, detail=f"r={r}, s={s}")
        chk.record(total == 2 ** r, detail=f"r={r}: total {total}")
    return chk


def morphism_audit(params: AuditParams, triples: list[TripleB] | None = None) -> list[Check]:
    """Targets of every morphism into or out of the distinguished summand.

    Page shifts ``M`` run over every non-zero value keeping ``p + M`` in ``[0, n]``.
    Returns the checks ``morphism_constraints``, ``morphism_targets_in_B`` and
    ``induction_descent``.
    """
    if triples is None:
        triples = enumerate_B(params)
    constraints = Check("morphism_constraints")
    membership = Check("morphism_targets_in_B")
    descent = Check("induction_descent")
    n, q_mode = params.n, params.mode == "q"
    geos: dict[int, FlagGeometry] = {}
    for t in triples:
        alpha, p, q = t.alpha, t.p, t.q
        geo = flag_geometry(params, alpha, p, formal=True)
        r = geo.r
        l_here = params.L(alpha, q if q_mode else p)
        for shift in range(-p, n - p + 1):
            if shift == 0:
                continue
            p1 = p + shift
            for term in _e1_terms(params, geo, alpha, p, q + sgn(shift), p1):
                beta, q1 = term.beta, term.q_target
                if not 0 <= q1 <= n:
                    continue
                where = f"M={shift} -> (beta={beta}, p'={p1}, q'={q1})"
                ok_p = p1 - p >= r * (beta - alpha)
                ok_q = q1 - q == sgn(shift) + alpha - beta + shift and \
                    q1 - q >= (r - 1) * (beta - alpha) + sgn(beta - alpha)
                constraints.record(ok_p and ok_q, alpha, p, q, where)
                membership.record(params.in_B(beta, p1, q1), alpha, p, q, where)
                l_there = params.L(beta, q1 if q_mode else p1)
                descent.record(l_there <= l_here - 1, alpha, p, q, f"{where}: L {l_here} -> {l_there}")
    return [constraints, membership, descent]


def kan_audit(params: AuditParams, triples: list[TripleB] | None = None) -> list[Check]:
    """The Kodaira-Akizuki-Nakano step, reduced to one inequality in the base data.

    ``kan_reduction``: at every triple, ``P + q + chi - dim Y`` minus the slack
    ``p + q - p0 - q0 - 2Q(alpha)`` equals the difference of the two sides of
    the reduced inequality, and at binding triples positivity of one matches
    the other.  ``kan_nonnegativity``: both correction terms are >= 0 on B and
    ``alpha(e - k + alpha)`` vanishes only at the smallest alpha of B.
    ``kan_conclusion``: if ``p0 + q0 - n`` beats the threshold, every triple
    satisfies ``P + q + chi > dim Y``.
    """
    if triples is None:
        triples = enumerate_B(params)
    n, e, k = params.n, params.e, params.k
    a0, r0, p0, q0 = params.alpha0, params.r0, params.p0, params.q0
    rhs = (r0 + a0) * (e - k + a0) + a0 * (r0 - 1)
    hypothesis = p0 + q0 - n > rhs
    reduction = Check("kan_reduction")
    nonneg = Check("kan_nonnegativity")
    conclusion = Check("kan_conclusion")
    alpha_min = min((t.alpha for t in triples), default=None)
    seen_alpha = set()
    for t in triples:
        alpha, p, q = t.alpha, t.p, t.q
        geo = flag_geometry(params, alpha, p, formal=True)
        full = geo.P + q + geo.chi - geo.dimY
        qa = params.Q(alpha)
        slack = p + q - (p0 + q0 + 2 * qa)
        d = alpha - a0
        lhs = p0 + q0 - n + alpha * (e - k + alpha) + abs(d) + d
        reduction.record(full - slack == lhs - rhs, alpha, p, q, f"full={full}, slack={slack}, reduced {lhs} vs {rhs}")
        if slack == 0:
            reduction.record((full > 0) == (lhs > rhs), alpha, p, q, f"binding: full={full}, reduced {lhs} > {rhs}")
        if hypothesis:
            conclusion.record(full > 0, alpha, p, q, f"P+q+chi-dimY = {full}")
        if alpha not in seen_alpha:
            seen_alpha.add(alpha)
            t1, t2 = alpha * (e - k + alpha), abs(d) + d
            nonneg.record(t1 >= 0 and t2 >= 0, alpha, detail=f"alpha(e-k+alpha)={t1}, |d|+d={t2}")
            nonneg.record((t1 == 0) == (alpha == alpha_min), alpha,
                          detail=f"alpha(e-k+alpha)={t1}, min alpha in B = {alpha_min}")
    return [reduction, nonneg, conclusion]


def distinguished_summand_check(params: AuditParams, triples: list[TripleB] | None = None) -> Check:
    """Where the decomposition is valid, column ``p`` contains ``H^{p,q}(Gamma^alpha_k)`` once."""
    if triples is None:
        triples = enumerate_B(params)
    chk = Check("distinguished_summand")
    for t in triples:
        if t.alpha >= params.k:
            continue
        geo = flag_geometry(params, t.alpha, t.p, formal=True)
        if geo.degenerate or not geo.decomposition_valid:
            continue
        terms = _e1_terms(params, geo, t.alpha, t.p, t.q, t.p)
        chk.record(E1Term(t.alpha, t.q, 1) in terms, t.alpha, t.p, t.q, f"terms={terms}")
    return chk


def _floor(x) -> int | None:
    return None if x == NEG_INF else floor(x)


def k_alpha_profile(params: AuditParams, triples: list[TripleB] | None = None) -> dict:
    """Tabulate ``[k(alpha)]`` over the alphas of B and the claims made about its maximum.

    Everything here is informational except the delta inequality, which is
    also run as a check by :func:`full_audit`.
    """
    if triples is None:
        triples = enumerate_B(params)
    alphas = sorted({t.alpha for t in triples})
    kb = {a: induction_scalars(params, a, params.p0).k_bound for a in alphas}
    floors = {a: _floor(kb[a]) for a in alphas}
    finite = {a: f for a, f in floors.items() if f is not None}
    out: dict = {
        "table": {str(a): (None if floors[a] is None else floors[a]) for a in alphas},
        "argmax": None,
        "max": None,
        "k_exceeds_bound": all(params.k > kb[a] for a in alphas),
        "exceptional": False,
    }
    if finite:
        top = max(finite.values())
        out["max"] = top
        out["argmax"] = min(a for a, f in finite.items() if f == top)
        allowed = {1, params.k - params.e} | ({0} if params.alpha0 == 0 else set())
        anchors = [finite[a] for a in allowed if a in finite]
        out["exceptional"] = bool(anchors) and top > max(anchors)
        if out["exceptional"] and 1 in finite:
            out["exceptional_margin"] = top - finite[1]

    # real k(alpha) on alpha0 <= alpha <= r0 + alpha0 - 1, alpha >= 1
    lo = max(params.alpha0, 1)
    hi = params.r0 + params.alpha0 - 1
    seq = [induction_scalars(params, a, params.p0).k_bound for a in range(lo, hi + 1)]
    out["decreasing_on_interval"] = all(x >= y for x, y in zip(seq, seq[1:]))
    if params.alpha0 == 0 and params.r0 >= 2:
        k0 = induction_scalars(params, 0, params.p0).k_bound
        k1 = induction_scalars(params, 1, params.p0).k_bound
        out["k0_ge_k1"] = k0 >= k1
    return out


def full_audit(params: AuditParams) -> AuditReport:
    triples = enumerate_B(params)
    checks: list[Check] = []
    checks.append(cutoff_check(params))
    checks.append(delta_inequality_check(params))
    checks.append(helper_inequality_check(params))
    rs = {params.r0 + params.alpha0 - a for a in params.alpha_range()}
    checks.append(ns_check(rs))
    checks.extend(morphism_audit(params, triples))
    checks.extend(kan_audit(params, triples))
    checks.append(distinguished_summand_check(params, triples))

    formal_only = []
    for t in triples:
        r = params.r0 + params.alpha0 - t.alpha
        if params.k < r or r > params.e or t.alpha >= params.k:
            formal_only.append(t)
    info = {
        "formal_only": len(formal_only),
        "formal_only_examples": [asdict(t) for t in formal_only[:5]],
        "k_profile": k_alpha_profile(params, triples),
    }
    return AuditReport(params, len(triples), checks, info)


def iter_grid(n_range, e_range, k_range, m_range, modes=("p", "q")) -> Iterator[AuditParams]:
    """The acceptance-style grid: every ``alpha0 < k``, ``p0, q0 <= n``, skipping ``k < m``."""
    for n in n_range:
        for e in e_range:
            for k in k_range:
                for m in m_range:
                    if k // m < 1:
                        continue
                    for a0 in range(k):
                        for p0 in range(n + 1):
                            for q0 in range(n + 1):
                                for mode in modes:
                                    yield AuditParams(n, e, k, m, a0, p0, q0, mode)
