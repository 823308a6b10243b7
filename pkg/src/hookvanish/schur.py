"""Rank-bounded Schur calculus: GL_e characters written in the Schur basis.

Products go through the Littlewood-Richardson rule (memoised on the
unrestricted pair of partitions).  A second, disjoint route expands Schur
polynomials into monomials via semistandard tableaux, multiplies them and
peels off leading terms; it only exists to cross-check the first.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache, reduce
from itertools import product
from math import lcm
from typing import Iterable, Iterator, Mapping

from . import config
from .errors import LengthExceedsRank, OracleTooLarge, RankMismatch
from .partitions import Dominance, Partition, dominates, make_partition, partitions_of


def _as_partition(part: Iterable[int]) -> Partition:
    return part if isinstance(part, Partition) else make_partition(part)


# -- Littlewood-Richardson coefficients ---------------------------------------

def _strips(shape: tuple[int, ...], size: int, prev: tuple[int, ...] | None):
    """Ways to add ``size`` boxes of one letter as a horizontal strip.

    ``prev`` holds, row by row, how many copies of the previous letter are
    present (``None`` for the first letter).  The lattice condition on the
    right-to-left, top-to-bottom reading word is equivalent to: for each row
    r, letters placed in rows <= r never outnumber previous letters in rows < r.
    Yields ``(new_shape, counts)`` with counts per row of the new letter.
    """
    ext = shape + (0,)
    rows = len(ext)
    acc = [0] * rows

    def rec(r: int, remaining: int, placed: int, budget: int):
        if r == rows:
            if remaining == 0:
                new = tuple(x + a for x, a in zip(ext, acc))
                yield (new[:-1] if new[-1] == 0 else new), tuple(acc)
            return
        room = remaining if r == 0 else ext[r - 1] - ext[r]
        cap = min(room, remaining)
        if prev is not None:
            cap = min(cap, budget - placed)
        for a in range(cap, -1, -1):
            acc[r] = a
            nxt = budget + (prev[r] if prev is not None and r < len(prev) else 0)
            yield from rec(r + 1, remaining - a, placed + a, nxt)
        acc[r] = 0

    yield from rec(0, size, 0, 0)


@lru_cache(maxsize=None)
def lr_coefficients(mu: tuple[int, ...], nu: tuple[int, ...]) -> Mapping[Partition, int]:
    """All ``c^lam_{mu,nu} > 0`` as ``{lam: c}``, with no bound on length."""
    states: Counter = Counter({(tuple(mu), None): 1})
    for letter_count in nu:
        nxt: Counter = Counter()
        for (shape, prev), mult in states.items():
            for new_shape, counts in _strips(shape, letter_count, prev):
                nxt[(new_shape, counts)] += mult
        states = nxt
    out: Counter = Counter()
    for (shape, _), mult in states.items():
        out[Partition(shape)] += mult
    return dict(out)


# -- Schur vectors ------------------------------------------------------------

@dataclass(frozen=True)
class SchurVector:
    """Finite Z-combination of Schur functions, truncated to ``length <= rank``."""

    rank: int
    entries: Mapping[Partition, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {Partition(p): m for p, m in self.entries.items() if m != 0 and len(p) <= self.rank}
        object.__setattr__(self, "entries", clean)

    @classmethod
    def basis(cls, part: Iterable[int], rank: int) -> "SchurVector":
        return cls(rank, {_as_partition(part): 1})

    @classmethod
    def unit(cls, rank: int) -> "SchurVector":
        return cls(rank, {Partition(()): 1})

    def __eq__(self, other):
        if not isinstance(other, SchurVector):
            return NotImplemented
        return self.rank == other.rank and dict(self.entries) == dict(other.entries)

    def __hash__(self):
        return hash((self.rank, frozenset(self.entries.items())))

    def __getitem__(self, part) -> int:
        return self.entries.get(_as_partition(part), 0)

    def __iter__(self):
        return iter(sorted(self.entries))

    def __len__(self):
        return len(self.entries)

    def __add__(self, other: "SchurVector") -> "SchurVector":
        _check_rank(self, other)
        total = Counter(self.entries)
        total.update(other.entries)
        return SchurVector(self.rank, total)

    def __mul__(self, other: "SchurVector") -> "SchurVector":
        return lr_product(self, other)

    def items(self):
        return sorted(self.entries.items())

    def dimension(self) -> int:
        return sum(m * dimension(p, self.rank) for p, m in self.entries.items())

    def to_json(self) -> list[dict]:
        return [{"partition": str(p), "mult": m} for p, m in self.items()]

    def __str__(self) -> str:
        if not self.entries:
            return "0"
        terms = []
        for p, m in self.items():
            coeff = "" if m == 1 else f"{m}*"
            terms.append(f"{coeff}s({p})")
        return " + ".join(terms)


def _check_rank(u: SchurVector, v: SchurVector) -> None:
    if u.rank != v.rank:
        raise RankMismatch(f"rank bounds differ: {u.rank} vs {v.rank}")


def lr_product(u: SchurVector, v: SchurVector) -> SchurVector:
    _check_rank(u, v)
    e = u.rank
    total: Counter = Counter()
    for a, ma in u.entries.items():
        for b, mb in v.entries.items():
            for lam, c in lr_coefficients(tuple(a), tuple(b)).items():
                if len(lam) <= e:
                    total[lam] += ma * mb * c
    return SchurVector(e, total)


def _require_rank(part: Partition, e: int) -> None:
    if e < 1:
        raise LengthExceedsRank(f"rank must be positive, got {e}")
    if len(part) > e:
        raise LengthExceedsRank(f"{tuple(part)} has more than {e} rows")


def tensor_power(part: Iterable[int], t: int, e: int) -> SchurVector:
    part = _as_partition(part)
    _require_rank(part, e)
    if t < 1:
        raise ValueError(f"tensor power exponent must be positive, got {t}")
    if t * part.weight > config.POWER_MAX_WEIGHT:
        raise OracleTooLarge(f"weight {t * part.weight} exceeds POWER_MAX_WEIGHT={config.POWER_MAX_WEIGHT}")
    base = SchurVector.basis(part, e)
    out = base
    for _ in range(t - 1):
        out = lr_product(out, base)
    return out


def dimension(part: Iterable[int], e: int) -> int:
    """``dim S_I C^e`` from the hook-content formula."""
    part = _as_partition(part)
    _require_rank(part, e)
    conj = part.conjugate()
    num = den = 1
    for i, row in enumerate(part):
        for j in range(row):
            num *= e + j - i
            den *= (row - j) + (conj[j] - i) - 1
    return num // den


def branch_direct_sum(part: Iterable[int], ea: int, eb: int) -> dict[tuple[Partition, Partition], int]:
    """Restriction of ``S_I`` from ``GL(ea + eb)`` to ``GL(ea) x GL(eb)``.

    Returns ``{(J, K): c^I_{J,K}}`` over pairs with ``len(J) <= ea``,
    ``len(K) <= eb`` and a positive coefficient.
    """
    from .partitions import contained_in

    part = _as_partition(part)
    out: dict[tuple[Partition, Partition], int] = {}
    for inner in contained_in(part):
        if len(inner) > ea:
            continue
        for other in partitions_of(part.weight - inner.weight, max_length=eb):
            c = lr_coefficients(tuple(inner), tuple(other)).get(part, 0)
            if c:
                out[(inner, other)] = c
    return dict(sorted(out.items()))


def is_one_dimensional(part: Partition, e: int) -> bool:
    """Determinant powers: the empty partition or a rectangle with exactly ``e`` rows."""
    return not part or (len(part) == e and part[0] == part[-1])


def one_dim_multiplicity(part: Iterable[int], t: int, e: int) -> int:
    power = tensor_power(part, t, e)
    return sum(m for p, m in power.entries.items() if is_one_dimensional(p, e))


# -- monomial oracle ----------------------------------------------------------

def ssyt(shape: tuple[int, ...], e: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Semistandard tableaux of ``shape`` with entries in ``0..e-1``, filled row by row."""
    shape = tuple(shape)
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    grid: dict[tuple[int, int], int] = {}

    def rec(idx: int):
        if idx == len(cells):
            yield tuple(tuple(grid[(i, j)] for j in range(row)) for i, row in enumerate(shape))
            return
        i, j = cells[idx]
        lo = 0
        if j > 0:
            lo = grid[(i, j - 1)]
        if i > 0:
            lo = max(lo, grid[(i - 1, j)] + 1)
        for v in range(lo, e):
            grid[(i, j)] = v
            yield from rec(idx + 1)
        grid.pop((i, j), None)

    yield from rec(0)


def schur_polynomial(shape: tuple[int, ...], e: int) -> Counter:
    poly: Counter = Counter()
    for tab in ssyt(shape, e):
        expo = [0] * e
        for row in tab:
            for v in row:
                expo[v] += 1
        poly[tuple(expo)] += 1
    return poly


def _poly_mul(a: Mapping, b: Mapping) -> Counter:
    out: Counter = Counter()
    for ea, ca in a.items():
        for eb, cb in b.items():
            out[tuple(x + y for x, y in zip(ea, eb))] += ca * cb
    return out


def oracle_product_monomial(left: Iterable[int], right: Iterable[int], e: int) -> SchurVector:
    """Product of two Schur polynomials in ``e`` variables, decomposed by leading monomials."""
    left, right = _as_partition(left), _as_partition(right)
    if left.weight + right.weight > config.ORACLE_MAX_WEIGHT or e > config.ORACLE_MAX_RANK:
        raise OracleTooLarge(
            f"oracle guard: |I|+|J| <= {config.ORACLE_MAX_WEIGHT}, e <= {config.ORACLE_MAX_RANK}"
        )
    if e < 1:
        raise LengthExceedsRank(f"rank must be positive, got {e}")
    poly = _poly_mul(schur_polynomial(tuple(left), e), schur_polynomial(tuple(right), e))
    poly = Counter({k: v for k, v in poly.items() if v})
    result: dict[Partition, int] = {}
    while poly:
        lead = max(poly)
        coeff = poly[lead]
        lam = make_partition(lead)
        result[lam] = coeff
        for mono, c in schur_polynomial(tuple(lam), e).items():
            poly[mono] -= coeff * c
            if poly[mono] == 0:
                del poly[mono]
    return SchurVector(e, result)


# -- desk-scale checks: dominated shapes in tensor powers, twisted direct summands --

@dataclass
class SpotCheck:
    passed: bool
    power: int
    weight: int
    candidates: list[Partition]
    missing: list[Partition]

    def to_json(self) -> dict:
        return {
            "pass": self.passed,
            "power": self.power,
            "weight": self.weight,
            "candidates": [str(p) for p in self.candidates],
            "missing": [str(p) for p in self.missing],
        }


def lemma24_spot_check(big: Iterable[int], small: Iterable[int], kfactor: int, e: int,
                       *, lcm_scaled: bool = True) -> SpotCheck:
    """Every partition dominated by ``k|J| I`` occurs in ``S_I^{(x) k|J|}``.

    ``k = kfactor * lcm(1..e)`` by default, the multiples for which the claim
    is made; ``lcm_scaled=False`` uses ``k = kfactor`` verbatim, which already
    fails for ``I=(2), J=(1), k=1, e=2`` because ``(1,1)`` is dominated by ``(2)``.
    """
    big, small = _as_partition(big), _as_partition(small)
    _require_rank(big, e)
    if not big or not small:
        from .errors import ZeroPartition
        raise ZeroPartition("spot check needs non-zero partitions")
    k = kfactor * lcm(*range(1, e + 1)) if lcm_scaled else kfactor
    t = k * small.weight
    weight = t * big.weight
    if weight > config.POWER_MAX_WEIGHT:
        raise OracleTooLarge(f"weight {weight} exceeds POWER_MAX_WEIGHT={config.POWER_MAX_WEIGHT}")
    top = Partition(t * x for x in big)
    candidates = [
        p for p in partitions_of(weight, max_length=e)
        if dominates(top, p) in (Dominance.STRICTLY_DOMINATES, Dominance.EQUIVALENT)
    ]
    power = tensor_power(big, t, e)
    missing = [p for p in candidates if power[p] <= 0]
    return SpotCheck(not missing, t, weight, candidates, missing)


def prop28_summand(k: int, kprime: int, alpha: int, eprime: int) -> dict:
    """Check that ``Gamma^alpha_{k'} E' (x) L^{k-k'}`` sits inside ``Gamma^alpha_k (E' + L^{k-k'})``.

    Two routes: peel one line bundle at a time (``eB = 1`` each step, picking
    the ``K = (1)`` summand), and a single branching with ``eB = k - k'`` where
    ``L^{k-k'}`` is the determinant ``K = (1^{k-k'})`` of the trivialised block.
    """
    from .partitions import hook_partition

    target = hook_partition(kprime, alpha)
    if len(target) > eprime:
        raise LengthExceedsRank(f"hook {tuple(target)} has more than {eprime} rows")
    chain = []
    ok_chain = True
    for j in range(k, kprime, -1):
        rank_a = eprime + (j - 1 - kprime)
        branched = branch_direct_sum(hook_partition(j, alpha), rank_a, 1)
        mult = branched.get((hook_partition(j - 1, alpha), Partition((1,))), 0)
        chain.append({"k": j, "rank_a": rank_a, "mult": mult})
        ok_chain = ok_chain and mult >= 1
    d = k - kprime
    block = branch_direct_sum(hook_partition(k, alpha), eprime, d)
    det_mult = block.get((target, Partition((1,) * d)), 0)
    return {
        "pass": ok_chain and det_mult >= 1,
        "line_bundle_power": d,
        "chain": chain,
        "block_multiplicity": det_mult,
    }
