"""Structural identities tying two-shell candidates to their per-shell
constituents: constituent extraction with closed-form indices, the
balance-sum criterion over all t-subsets, intersection-count formulas,
complement index transfer, tightness, and the outside-triple coverage
condition for complementary tight 3-designs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .designs import (
    Design,
    bits_of,
    complement,
    coverage_map,
    is_regular_twise_balanced,
    is_t_design,
)
from .hamming import RelativeCandidate

__all__ = [
    "ShellReport",
    "KageyamaReport",
    "kageyama_constituents",
    "check_via_thm34",
    "p_ell_formula",
    "p_ell_t_formula",
    "complement_lambda_t",
    "tight_size",
    "is_tight",
    "complementary_pair",
    "prop44_check",
]


@dataclass(frozen=True)
class ShellReport:
    """One shell's constituent check."""

    r: int
    is_design: bool  # combinatorial (t-1)-design?
    lambda_observed: tuple | None  # (lam_0..lam_{t-1}) when is_design
    lambda_formula: Fraction  # closed-form lam_{t-1}
    matches: bool


@dataclass(frozen=True)
class KageyamaReport:
    """Constituent decomposition of a two-shell candidate.

    applicable is False when the union fails to be t- and (t-1)-wise
    balanced under the shell weights, in which case nothing else is filled
    in.  When applicable, weighted_lambda holds the union's (lam_{t-1},
    lam_t) and each ShellReport compares the observed per-shell index
    against the closed form

        lam^(r1)_{t-1} = ((r2-t+1) lam_{t-1} - (n-t+1) lam_t) / ((r2-r1) w1)

    and the r2 analogue with the roles of r1 and r2 exchanged.
    """

    applicable: bool
    t: int
    weighted_lambda: tuple | None
    shells: tuple | None


def kageyama_constituents(cand: RelativeCandidate, t: int) -> KageyamaReport:
    if t < 2:
        raise ValueError("t must be >= 2")
    union = cand.union_design()
    ok, lams = is_regular_twise_balanced(union, cand.weight_by_size(), t)
    if not ok:
        return KageyamaReport(False, t, None, None)
    lam_tm1, lam_t = lams[t - 2], lams[t - 1]
    n = cand.n
    reports = []
    for (r, design, w), r_other in (
        ((cand.r1, cand.design1, cand.w1), cand.r2),
        ((cand.r2, cand.design2, cand.w2), cand.r1),
    ):
        formula = ((r_other - t + 1) * lam_tm1 - (n - t + 1) * lam_t) / (
            (r_other - r) * w
        )
        ok_d, observed = is_t_design(design, t - 1)
        matches = bool(ok_d) and Fraction(observed[t - 1]) == formula
        reports.append(
            ShellReport(r, bool(ok_d), tuple(observed) if ok_d else None, formula, matches)
        )
    return KageyamaReport(True, t, (lam_tm1, lam_t), tuple(reports))


def check_via_thm34(cand: RelativeCandidate, t: int):
    """Balance-sum criterion: both shells must be (t-1)-designs and every
    t-subset T must satisfy

        w1*lam_t^(1)(T) + w2*lam_t^(2)(T)
            = sum_nu N_nu w_nu prod_{j=0}^{t-1} (r_nu - j)/(n - j).

    Returns (True, None) or (False, first failing t-subset); the shell
    precondition failing returns (False, None).
    """
    if not 1 <= t <= cand.n:
        raise ValueError("need 1 <= t <= n")
    n = cand.n
    for _, design, _ in cand.shells():
        ok, _ = is_t_design(design, t - 1) if t >= 2 else (True, None)
        if not ok:
            return False, None
    rhs = Fraction(0)
    for r, design, w in cand.shells():
        prod = Fraction(1)
        for j in range(t):
            prod *= Fraction(r - j, n - j)
        rhs += design.num_blocks * w * prod
    cov1 = coverage_map(cand.design1, t)
    cov2 = coverage_map(cand.design2, t)
    w1, w2 = cand.w1, cand.w2
    for sub in combinations(range(n), t):
        if w1 * cov1.get(sub, 0) + w2 * cov2.get(sub, 0) != rhs:
            return False, sub
    return True, None


# ---------------------------------------------------------------------------
# intersection-count closed forms
#
# p(ell; S) below always means the number of blocks B with B cap S = E for
# one FIXED ell-subset E of S; the count does not depend on which E is
# chosen.  The number of blocks meeting S in *some* ell-subset is C(s,ell)
# times this value.


def p_ell_formula(n: int, r: int, N: int, s: int, ell: int) -> Fraction:
    """Fixed-subset intersection count for an s-subset, s within the balance
    range: p = C(n-s, r-ell) / C(n,r) * N."""
    if not 0 <= ell <= s <= n or not 0 <= r <= n:
        raise ValueError("need 0 <= ell <= s <= n and 0 <= r <= n")
    return Fraction(math.comb(n - s, r - ell) * N, math.comb(n, r))


def p_ell_t_formula(
    n: int, r: int, N: int, t: int, ell: int, lambda_t_value
) -> Fraction:
    """Fixed-subset intersection count at subset size t, where the answer
    depends on the t-subset only through its coverage count:

    p = N/C(n,r) * (C(n-t,r-ell) - (-1)^{t-ell} C(n-t,r-t))
        + (-1)^{t-ell} lam_t(T).
    """
    if not 0 <= ell <= t - 1:
        raise ValueError("need 0 <= ell <= t-1")
    if not 1 <= t <= n or not 0 <= r <= n:
        raise ValueError("need 1 <= t <= n and 0 <= r <= n")
    sign = (-1) ** (t - ell)
    core = math.comb(n - t, r - ell) - sign * math.comb(n - t, r - t)
    return Fraction(N * core, math.comb(n, r)) + sign * Fraction(lambda_t_value)


def complement_lambda_t(n: int, r: int, N: int, t: int, lambda_t_value) -> Fraction:
    """Coverage count of the complemented blocks at the same t-subset:

    lam_t^c(T) = (-1)^t lam_t(T)
                 + N/C(n,r) * (C(n-t,r) - (-1)^t C(n-t,n-r)).
    """
    if not 1 <= t <= n or not 0 <= r <= n:
        raise ValueError("need 1 <= t <= n and 0 <= r <= n")
    sign = (-1) ** t
    core = math.comb(n - t, r) - sign * math.comb(n - t, n - r)
    return sign * Fraction(lambda_t_value) + Fraction(N * core, math.comb(n, r))


# ---------------------------------------------------------------------------
# tightness


def tight_size(t: int, n: int) -> int:
    """Smallest possible total block count of a two-shell relative t-design
    with per-shell-constant weight: 2n for t=3, n(n+1)/2 for t=4,
    2*C(n,2) for t=5."""
    if t == 3:
        return 2 * n
    if t == 4:
        return n * (n + 1) // 2
    if t == 5:
        return 2 * math.comb(n, 2)
    raise ValueError("tight size known here only for t in {3,4,5}")


def is_tight(cand: RelativeCandidate, t: int) -> bool:
    """Total size meets the bound and the candidate is a relative t-design."""
    if cand.total_size != tight_size(t, cand.n):
        return False
    ok, _ = check_via_thm34(cand, t)
    return ok


def complementary_pair(design: Design) -> RelativeCandidate:
    """The design and its complement as a two-shell candidate, unit weights.

    Block size r must differ from n-r; shells come out ordered by size.
    """
    r = design.uniform_size()
    if 2 * r == design.n:
        raise ValueError("complement lies on the same shell (r = n/2)")
    return RelativeCandidate.from_designs(design, complement(design))


def prop44_check(cand: RelativeCandidate):
    """Outside-triple coverage condition for complementary-shell candidates.

    Requires r1 + r2 = n, equal weights, and a tight relative 3-design;
    otherwise returns ("not-applicable", reason).  When applicable, checks
    that for every block B of the larger shell, every 3-subset of the r1
    points outside B is covered at least once by the smaller shell.
    Returns ("holds", None) or ("fails", (block_points, triple)).
    """
    if cand.r1 + cand.r2 != cand.n:
        return "not-applicable", "shells are not complementary (r1 + r2 != n)"
    if cand.w1 != cand.w2:
        return "not-applicable", "shell weights differ"
    if cand.total_size != tight_size(3, cand.n):
        return "not-applicable", "total size is not the tight bound 2n"
    ok, _ = check_via_thm34(cand, 3)
    if not ok:
        return "not-applicable", "not a relative 3-design"
    cov1 = coverage_map(cand.design1, 3)
    full = (1 << cand.n) - 1
    for b in cand.design2.blocks:
        outside = bits_of(full ^ b)  # exactly r1 points
        for triple in combinations(outside, 3):
            if triple not in cov1:
                return "fails", (bits_of(b), triple)
    return "holds", None
