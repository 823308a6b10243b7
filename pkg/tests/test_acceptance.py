"""Exit criteria, one test each, at the stated tolerances (all exact) and time budgets."""

import os
import subprocess
import sys
import time
from collections import Counter
from itertools import combinations
from math import comb

import pytest

from hookvanish.audit import full_audit, iter_grid, ns_table
from hookvanish.partitions import Partition, delta, hook_partition, partitions_of
from hookvanish.schur import (
    SchurVector,
    branch_direct_sum,
    lemma24_spot_check,
    lr_coefficients,
    lr_product,
    one_dim_multiplicity,
    oracle_product_monomial,
    prop28_summand,
)
from hookvanish.vanishing import VanishingQuery, evaluate, thm21_threshold, thm22_threshold


class Criterion:
    def __init__(self, log, number, title, budget):
        self.log, self.number, self.title, self.budget = log, number, title, budget
        self.failures = []

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def fail(self, what):
        self.failures.append(what)

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        ok = exc_type is None and not self.failures and elapsed < self.budget
        detail = f"{elapsed:.2f}s / {self.budget}s"
        if self.failures:
            detail += f"; {len(self.failures)} failures, first: {self.failures[0]}"
        if exc_type is not None:
            detail += f"; raised {exc_type.__name__}: {exc}"
        self.log.append(f"{'PASS' if ok else 'FAIL'}  [{self.number:>2}] {self.title} ({detail})")
        print(self.log[-1])
        if exc_type is None:
            assert not self.failures, self.failures[:5]
            assert elapsed < self.budget, f"took {elapsed:.1f}s, budget {self.budget}s"
        return False


def test_01_lr_matches_monomial_oracle(acceptance_log):
    lr_coefficients.cache_clear()
    with Criterion(acceptance_log, 1, "LR product == monomial oracle, |I|,|J|<=6, e<=4", 60) as c:
        for wa in range(7):
            for wb in range(7):
                for a in partitions_of(wa):
                    for b in partitions_of(wb):
                        for e in range(1, 5):
                            lhs = lr_product(SchurVector.basis(a, e), SchurVector.basis(b, e))
                            if lhs != oracle_product_monomial(a, b, e):
                                c.fail((a, b, e))


def test_02_hook_recursion(acceptance_log):
    with Criterion(acceptance_log, 2, "column x row = two adjacent hooks, k<=8, e<=8", 30) as c:
        for k in range(2, 9):
            for alpha in range(1, k):
                for e in range(1, 9):
                    column = SchurVector.basis((1,) * (k - alpha), e)
                    row = SchurVector.basis((alpha,), e)
                    expected = SchurVector.basis(hook_partition(k, alpha - 1), e) + \
                        SchurVector.basis(hook_partition(k, alpha), e)
                    if lr_product(column, row) != expected:
                        c.fail((k, alpha, e))
                    # the hook survives rank e exactly when e - k + alpha >= 0
                    if (SchurVector.basis(hook_partition(k, alpha), e).entries != {}) != (e - k + alpha >= 0):
                        c.fail(("vanishing", k, alpha, e))


def test_03_delta(acceptance_log):
    with Criterion(acceptance_log, 3, "delta bracketing, delta(C(m,2))=m, r0 inequality", 5) as c:
        for x in range(1001):
            d = delta(x)
            if not comb(d, 2) <= x < comb(d + 1, 2):
                c.fail(("bracket", x))
        for m in range(1, 41):
            if delta(comb(m, 2)) != m:
                c.fail(("triangular", m))
        for n in range(1, 9):
            for p0 in range(n + 1):
                for a0 in range(7):
                    for m in range(1, 4):
                        r0 = delta(n - p0 + comb(m, 2))
                        if not n - p0 + r0 * a0 + comb(a0 + 1, 2) < comb(r0 + a0 + 1, 2):
                            c.fail(("r0", n, p0, a0, m))


def test_04_ns_tables(acceptance_log):
    with Criterion(acceptance_log, 4, "n_s generating function == subset sums, r<=12", 5) as c:
        for r in range(1, 13):
            oracle = Counter()
            for s in range(r + 1):
                for sub in combinations(range(1, r + 1), s):
                    oracle[s, sum(sub)] += 1
            table = ns_table(r)
            for s in range(r + 1):
                sigma = r * s - comb(s, 2)
                for a in range(comb(r + 1, 2) + 2):
                    if table(s, a) != oracle.get((s, a), 0):
                        c.fail((r, s, a))
                    if a > sigma and table(s, a) != 0:
                        c.fail(("above sigma", r, s, a))
                if table(s, sigma) != 1:
                    c.fail(("at sigma", r, s))


def test_05_threshold_coincidence(acceptance_log):
    with Criterion(acceptance_log, 5, "staircase threshold at r=delta(n-p) == ample threshold", 5) as c:
        for n in range(1, 11):
            for p in range(n + 1):
                for k in range(1, 11):
                    for alpha in range(k):
                        for e in range(1, 13):
                            if thm22_threshold(delta(n - p), alpha, e, k) != thm21_threshold(n, p, alpha, e, k):
                                c.fail((n, p, alpha, e, k))


def test_06_exterior_power_specialisation(acceptance_log):
    with Criterion(acceptance_log, 6, "p=n, alpha=0, m=1: guaranteed iff q >= e-k+1", 5) as c:
        for e in range(1, 11):
            for k in range(1, e + 1):
                for n in range(1, 9):
                    for q in range(n + 1):
                        rep = evaluate(VanishingQuery(n=n, e=e, k=k, m=1, alpha=0, p=n, q=q))
                        if rep.guaranteed_pq != (q >= e - k + 1):
                            c.fail((n, e, k, q))


def test_07_audit_grid(acceptance_log):
    with Criterion(acceptance_log, 7, "full audit over n<=4, e<=6, k<=6, m<=3, both modes", 120) as c:
        points = 0
        for params in iter_grid(range(1, 5), range(1, 7), range(1, 7), range(1, 4)):
            points += 1
            rep = full_audit(params)
            if not rep.passed:
                c.fail((params, [ch.name for ch in rep.checks if not ch.passed]))
        if points != 38232:
            c.fail(("grid size", points))


def test_08_dominance_spot_checks(acceptance_log):
    with Criterion(acceptance_log, 8, "dominated shapes occur in tensor powers; V(I)^(x)e has a det power", 60) as c:
        for wa in range(1, 4):
            for big in partitions_of(wa):
                for wb in range(1, 4):
                    for small in partitions_of(wb):
                        for e in range(len(big), 4):
                            for kfactor in (1, 2):
                                chk = lemma24_spot_check(big, small, kfactor, e)
                                if not chk.passed:
                                    c.fail((big, small, kfactor, e, chk.missing[:3]))
        for w in range(0, 5):
            for part in partitions_of(w):
                for e in range(max(1, len(part)), 4):
                    if one_dim_multiplicity(part, e, e) < 1:
                        c.fail(("one-dim", part, e))


def test_09_direct_summand(acceptance_log):
    with Criterion(acceptance_log, 9, "hook of E' twisted by L^(k-k') is a summand, k<=5, e'<=4", 10) as c:
        for k in range(2, 6):
            for kp in range(1, k):
                for alpha in range(kp):
                    for ep in range(kp - alpha, 5):
                        out = prop28_summand(k, kp, alpha, ep)
                        if not out["pass"]:
                            c.fail((k, kp, alpha, ep, out))


def _cli(*argv):
    env = dict(os.environ)
    src = os.path.join(os.path.dirname(os.path.dirname(__file__)), "src")
    env["PYTHONPATH"] = src + os.pathsep + env.get("PYTHONPATH", "")
    return subprocess.run([sys.executable, "-m", "hookvanish", *argv], capture_output=True, env=env)


def test_10_determinism(acceptance_log):
    grid = ["sweep", "audit", "--n", "1..4", "--e", "1..6", "--k", "1..6", "--m", "1..3"]
    vgrid = ["sweep", "vanish", "--n", "1..4", "--e", "1..6", "--k", "1..6", "--m", "1..3", "--q", "0..n"]
    with Criterion(acceptance_log, 10, "repeated CLI sweeps are byte-identical (1 vs 4 workers)", 600) as c:
        first = _cli(*grid)
        second = _cli(*grid, "--workers", "4")
        if first.returncode != 0 or second.returncode != 0:
            c.fail(("exit codes", first.returncode, second.returncode, first.stderr[-300:]))
        if first.stdout != second.stdout or not first.stdout:
            c.fail("audit sweep output differs between runs")
        v1, v2 = _cli(*vgrid), _cli(*vgrid, "--workers", "3")
        if v1.stdout != v2.stdout or v1.returncode != 0:
            c.fail("vanish sweep output differs between runs")
        j1, j2 = _cli(*vgrid, "--format", "json"), _cli(*vgrid, "--format", "json")
        if j1.stdout != j2.stdout:
            c.fail("json sweep output differs between runs")
