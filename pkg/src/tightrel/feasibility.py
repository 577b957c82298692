"""Feasible-parameter scans for two-shell candidates at strengths 3 and 4,
plus the number-theoretic nonexistence tests applied to the per-shell
constituents (perfect-square test for even point counts, the ternary-form
test for odd ones, and the congruence test for triple systems with
lam = 2 of triangular-number shape).

A strength-3 tight candidate forces both shells to be symmetric
2-(n, r, r(r-1)/(n-1)) designs with n blocks each; a strength-4 tight
candidate forces the shells to be 3-designs whose block counts sum to
n(n+1)/2.  The scans enumerate everything passing those integrality
conditions and record, per row, how the per-shell strength-t coverage
counts can split along the weighted balance line

    x + (w2/w1) y = (N1 P(r1) + (w2/w1) N2 P(r2)) / 1,
    P(r) = prod_{j<t} (r-j)/(n-j).

Weight ratios are enumerated in lowest terms d1/d2 with 1 <= d1 <= lam1,
1 <= d2 <= lam2: consecutive lattice points on the line differ by
(d1, -d2), and the per-shell coverage counts take at least two values
(a symmetric design cannot be a 3-design, nor can these 3-design shells
be 4-designs when a single point would force constancy), so steps larger
than the coverage bounds or lines carrying fewer than two points are
ruled out.  The equal-weight case additionally demands an integral line
constant; for strength 4 the split is attached as an annotation and the
row is kept whenever the divisibility conditions hold, since the weighted
split is part of the later existence analysis rather than the search.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import partial

from .designs import DesignParams

__all__ = [
    "FeasibleRow",
    "NonexistenceVerdict",
    "symmetric_square_test",
    "brc_test",
    "legendre_solvable",
    "driessen_test",
    "scan_relative3",
    "scan_relative4",
    "annotate_existence",
    "rows_to_tsv",
    "TSV_HEADER",
]


@dataclass(frozen=True)
class NonexistenceVerdict:
    test: str  # SquareEven | BRCOdd | Driessen
    outcome: str  # RuledOut | Passes | NotApplicable
    detail: str


@dataclass(frozen=True)
class FeasibleRow:
    """One feasible parameter set.

    lam1/lam2 are the per-shell coverage constants at strength t-1;
    pairs lists the admissible integer points (x, y) of per-shell
    strength-t coverage values on the balance line; ratio is w2/w1 in
    lowest terms (1 for the equal-weight rows); case tags the strength-3
    split (1: complementary shells, equal weight; 2: complementary,
    unequal; 3: non-complementary, equal; 4: non-complementary, unequal;
    0 for strength-4 rows); star marks n = 4u-1 with r1 = 2u-1, r2 = 2u.
    """

    t: int
    n: int
    r1: int
    r2: int
    N1: int
    N2: int
    lam1: int
    lam2: int
    ratio: Fraction
    pairs: tuple
    case: int
    star: bool
    verdicts: tuple = ()


# ---------------------------------------------------------------------------
# nonexistence tests


def _is_square(m: int) -> bool:
    return m >= 0 and math.isqrt(m) ** 2 == m


def symmetric_square_test(p: DesignParams) -> NonexistenceVerdict:
    """Even point count: a symmetric 2-(v,k,lam) design needs k-lam square."""
    if p.v % 2 != 0:
        return NonexistenceVerdict("SquareEven", "NotApplicable", f"v={p.v} is odd")
    d = p.k - p.lam
    if _is_square(d):
        return NonexistenceVerdict("SquareEven", "Passes", f"k-lam={d} is a perfect square")
    return NonexistenceVerdict("SquareEven", "RuledOut", f"k-lam={d} is not a perfect square")


def _squarefree(m: int) -> int:
    """Largest squarefree divisor, sign preserved."""
    if m == 0:
        return 0
    sign = -1 if m < 0 else 1
    m = abs(m)
    out = 1
    f = 2
    while f * f <= m:
        if m % f == 0:
            cnt = 0
            while m % f == 0:
                m //= f
                cnt += 1
            if cnt % 2 == 1:
                out *= f
        f += 1 if f == 2 else 2
    return sign * out * m


def _is_qr(a: int, m: int) -> bool:
    """Whether a is a square modulo m (m >= 1)."""
    if m == 1:
        return True
    a %= m
    return any((w * w) % m == a for w in range(m))


def legendre_solvable(a: int, b: int, c: int) -> bool:
    """Whether a x^2 + b y^2 + c z^2 = 0 has a nontrivial integer solution.

    The coefficients must be nonzero and squarefree.  A prime dividing two
    of them is divided out first (the descent substitution preserves
    solvability); the classical criterion then says solvable iff the signs
    are mixed and -bc, -ac, -ab are squares mod |a|, |b|, |c| respectively.
    """
    for x in (a, b, c):
        if x == 0:
            raise ValueError("coefficients must be nonzero")
        if abs(_squarefree(x)) != abs(x):
            raise ValueError("coefficients must be squarefree")
    a, b, c = _normalize_ternary(a, b, c)
    if a > 0 and b > 0 and c > 0:
        return False
    if a < 0 and b < 0 and c < 0:
        return False
    return (
        _is_qr(-b * c, abs(a))
        and _is_qr(-a * c, abs(b))
        and _is_qr(-a * b, abs(c))
    )


def _normalize_ternary(a: int, b: int, c: int) -> tuple:
    """Reduce to squarefree pairwise-coprime coefficients with the same
    solvability: strip square parts, then repeatedly divide a common prime
    out of two coefficients while multiplying it into the third."""
    a, b, c = _squarefree(a), _squarefree(b), _squarefree(c)
    while True:
        g = math.gcd(a, b)
        if g > 1:
            a, b, c = a // g, b // g, _squarefree(c * g)
            continue
        g = math.gcd(a, c)
        if g > 1:
            a, c, b = a // g, c // g, _squarefree(b * g)
            continue
        g = math.gcd(b, c)
        if g > 1:
            b, c, a = b // g, c // g, _squarefree(a * g)
            continue
        return a, b, c


def brc_form(p: DesignParams) -> tuple:
    """Raw ternary form of the odd-v symmetric test:
    x^2 - (k-lam) y^2 - eps*lam z^2 with eps = (-1)^((v-1)/2)."""
    eps = -1 if ((p.v - 1) // 2) % 2 else 1
    return 1, -(p.k - p.lam), -eps * p.lam


def brc_test(p: DesignParams) -> NonexistenceVerdict:
    """Odd point count: x^2 = (k-lam) y^2 + (-1)^((v-1)/2) lam z^2 must have
    a nontrivial solution for a symmetric 2-(v,k,lam) design to exist."""
    if p.v % 2 == 0:
        return NonexistenceVerdict("BRCOdd", "NotApplicable", f"v={p.v} is even")
    a, b, c = brc_form(p)
    eps_term = f"+ {p.lam}z^2" if c < 0 else f"- {p.lam}z^2"
    form = f"x^2 = {p.k - p.lam}y^2 {eps_term}"
    na, nb, nc = _normalize_ternary(a, b, c)
    if legendre_solvable(na, nb, nc):
        return NonexistenceVerdict("BRCOdd", "Passes", f"{form} : solvable")
    return NonexistenceVerdict("BRCOdd", "RuledOut", f"{form} : insolvable")


def _odd_prime_factors_with_parity(u: int):
    """(p, exponent parity) for every odd prime dividing u."""
    out = []
    m = u
    while m % 2 == 0:
        m //= 2
    f = 3
    while f * f <= m:
        if m % f == 0:
            cnt = 0
            while m % f == 0:
                m //= f
                cnt += 1
            out.append((f, cnt % 2))
        f += 2
    if m > 1:
        out.append((m, 1))
    return out


def _driessen_u_admissible(u: int) -> bool:
    """Congruence condition: a 3-(u(u-1)/2 + u + 1, u+1, 2) design needs
    u = 2 mod 48 with every odd prime of odd multiplicity = 1,3,9,11 mod 16,
    or u = 14 mod 48 with those primes = 1,7,9,15 mod 16."""
    if u % 48 == 2:
        allowed = {1, 3, 9, 11}
    elif u % 48 == 14:
        allowed = {1, 7, 9, 15}
    else:
        return False
    return all(
        parity == 0 or p % 16 in allowed
        for p, parity in _odd_prime_factors_with_parity(u)
    )


def _driessen_shape(p: DesignParams):
    """Recognize (v,k,lam) as the lam=2 triangular shape with parameter u,
    or as its complement; returns (u, which) or None."""
    if p.t != 3:
        return None
    # direct shape: 3-(C(u,2)+u+1, u+1, 2)
    if p.lam == 2 and p.k >= 3:
        u = p.k - 1
        if p.v == u * (u - 1) // 2 + u + 1:
            return u, "direct"
    # complement shape: 3-(C(u+1,2)+1, C(u,2), (u^2-u-4)(u-2)/4)
    u = (1 + math.isqrt(1 + 8 * p.k)) // 2
    if u >= 3 and u * (u - 1) // 2 == p.k and p.v == u * (u + 1) // 2 + 1:
        num = (u * u - u - 4) * (u - 2)
        if num % 4 == 0 and num // 4 == p.lam:
            return u, "complement"
    return None


def driessen_test(p: DesignParams) -> NonexistenceVerdict:
    """Congruence test for triple systems with lam = 2 whose point count is a
    triangular number plus u+1 (or the complement of such a system)."""
    shape = _driessen_shape(p)
    if shape is None:
        return NonexistenceVerdict(
            "Driessen", "NotApplicable", f"3-({p.v},{p.k},{p.lam}) has no matching shape"
        )
    u, which = shape
    if _driessen_u_admissible(u):
        return NonexistenceVerdict(
            "Driessen", "Passes", f"u={u} ({which}): u mod 48 and prime conditions hold"
        )
    return NonexistenceVerdict(
        "Driessen", "RuledOut", f"u={u} ({which}): u mod 48 = {u % 48} fails the congruence conditions"
    )


# ---------------------------------------------------------------------------
# scans


def _line_points(base: int, den: int, step: int, lam1: int, lam2: int) -> tuple:
    """Integer points (x, y) with den*x = base - step*y, 0<=x<=lam1, 0<=y<=lam2,
    returned with x ascending."""
    pts = []
    for y in range(lam2 + 1):
        num = base - step * y
        if num < 0:
            break
        if num % den == 0:
            x = num // den
            if x <= lam1:
                pts.append((x, y))
    pts.sort()
    return tuple(pts)


def _ratio_rows(t, n, r1, r2, N1, N2, lam1, lam2, P1, P2, D, case) -> list:
    """Rows for reduced weight ratios d1/d2 != 1 whose balance line carries
    at least two integer points in the coverage box."""
    rows = []
    star = _star(n, r1, r2)
    for d1 in range(1, lam1 + 1):
        for d2 in range(1, lam2 + 1):
            if d1 == d2 or math.gcd(d1, d2) != 1:
                continue
            # x + (d1/d2) y = (P1 + (d1/d2) P2) / D, cleared of denominators
            pts = _line_points(P1 * d2 + P2 * d1, D * d2, D * d1, lam1, lam2)
            if len(pts) >= 2:
                rows.append(
                    FeasibleRow(
                        t, n, r1, r2, N1, N2, lam1, lam2,
                        Fraction(d1, d2), pts, case, star,
                    )
                )
    return rows


def _star(n: int, r1: int, r2: int) -> bool:
    return n % 4 == 3 and r1 == (n - 1) // 2 and r2 == (n + 1) // 2


def _scan3_one_n(n: int, cases: frozenset) -> list:
    rows = []
    D2 = n - 1
    D3 = (n - 1) * (n - 2)
    for r1 in range(2, n - 2):
        if (r1 * (r1 - 1)) % D2:
            continue
        lam1 = r1 * (r1 - 1) // D2
        P1 = r1 * (r1 - 1) * (r1 - 2)
        for r2 in range(r1 + 1, n - 1):
            if (r2 * (r2 - 1)) % D2:
                continue
            lam2 = r2 * (r2 - 1) // D2
            P2 = r2 * (r2 - 1) * (r2 - 2)
            comp = r1 + r2 == n
            eq_case, ratio_case = (1, 2) if comp else (3, 4)
            if eq_case in cases and (P1 + P2) % D3 == 0:
                S = (P1 + P2) // D3
                pts = tuple(
                    (x, S - x) for x in range(lam1 + 1) if 0 <= S - x <= lam2
                )
                # a symmetric design is never a 3-design, so a single
                # split point would be unrealizable
                if len(pts) >= 2:
                    rows.append(
                        FeasibleRow(
                            3, n, r1, r2, n, n, lam1, lam2,
                            Fraction(1), pts, eq_case, _star(n, r1, r2),
                        )
                    )
            if ratio_case in cases:
                rows.extend(
                    _ratio_rows(3, n, r1, r2, n, n, lam1, lam2, P1, P2, D3, ratio_case)
                )
    return rows


def _row_sort_key(row: FeasibleRow):
    return (row.n, row.r1, row.r2, row.N1, row.ratio != 1, row.ratio)


def scan_relative3(max_n: int, cases=frozenset({1, 2, 3, 4}), threads: int = 1) -> list:
    """All strength-3 feasible rows with n <= max_n.

    Both shells must be symmetric 2-(n, r, r(r-1)/(n-1)) designs with
    integral coverage constants; the four cases split on whether the shells
    are complementary (r1 + r2 = n) and whether the weights are equal.
    """
    if max_n < 4:
        raise ValueError("max_n must be >= 4")
    cases = frozenset(cases)
    if not cases or not cases <= {1, 2, 3, 4}:
        raise ValueError("cases must be a nonempty subset of {1,2,3,4}")
    ns = range(5, max_n + 1)  # the shell window 2 <= r1 < r2 <= n-2 needs n >= 5
    rows = []
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for part in pool.map(partial(_scan3_one_n, cases=cases), ns):
                rows.extend(part)
    else:
        for n in ns:
            rows.extend(_scan3_one_n(n, cases))
    rows.sort(key=_row_sort_key)
    return rows


def _divisibility_step(n: int, r: int) -> int:
    """Smallest N > 0 making N*C(r,j)/C(n,j) integral for j = 1, 2, 3."""
    step = 1
    for j in (1, 2, 3):
        cn, cr = math.comb(n, j), math.comb(r, j)
        step = math.lcm(step, cn // math.gcd(cn, cr))
    return step


def _scan4_one_n(n: int) -> list:
    rows = []
    total = n * (n + 1) // 2
    C3 = math.comb(n, 3)
    D4 = n * (n - 1) * (n - 2) * (n - 3)
    for r1 in range(3, n - 2):
        s1 = _divisibility_step(n, r1)
        Q1 = r1 * (r1 - 1) * (r1 - 2) * (r1 - 3)
        for r2 in range(r1 + 1, n - 1):
            s2 = _divisibility_step(n, r2)
            Q2 = r2 * (r2 - 1) * (r2 - 2) * (r2 - 3)
            for N1 in range(s1, total, s1):
                N2 = total - N1
                if N2 % s2:
                    continue
                lam1 = N1 * math.comb(r1, 3) // C3
                lam2 = N2 * math.comb(r2, 3) // C3
                if lam1 < 1 or lam2 < 1:
                    continue
                # equal-weight split along the strength-4 balance line,
                # attached whenever the line constant is integral
                base = N1 * Q1 + N2 * Q2
                pts = ()
                if base % D4 == 0:
                    S = base // D4
                    pts = tuple(
                        (x, S - x) for x in range(lam1 + 1) if 0 <= S - x <= lam2
                    )
                rows.append(
                    FeasibleRow(
                        4, n, r1, r2, N1, N2, lam1, lam2,
                        Fraction(1), pts, 0, _star(n, r1, r2),
                    )
                )
                rows.extend(
                    _ratio_rows(4, n, r1, r2, N1, N2, lam1, lam2,
                                N1 * Q1, N2 * Q2, D4, 0)
                )
    return rows


def scan_relative4(max_n: int, threads: int = 1) -> list:
    """All strength-4 feasible rows with n <= max_n: shells are 3-designs
    (coverage constants integral at strengths 1..3, lam3 >= 1) whose block
    counts sum to n(n+1)/2."""
    if max_n < 5:
        raise ValueError("max_n must be >= 5")
    ns = range(6, max_n + 1)  # r window needs 3 <= r1 < r2 <= n-2
    rows = []
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for part in pool.map(_scan4_one_n, ns):
                rows.extend(part)
    else:
        for n in ns:
            rows.extend(_scan4_one_n(n))
    rows.sort(key=_row_sort_key)
    return rows


# ---------------------------------------------------------------------------
# annotation and output


def _shell_verdict(n: int, r: int, lam: int, N: int, t: int) -> NonexistenceVerdict:
    if t == 3 and N == n:
        # symmetric 2-design constituent
        params = DesignParams(n, r, lam, 2)
        return symmetric_square_test(params) if n % 2 == 0 else brc_test(params)
    # strength-4 rows have 3-design constituents
    return driessen_test(DesignParams(n, r, lam, 3))


def annotate_existence(rows) -> list:
    """Attach one nonexistence verdict per shell to every row."""
    out = []
    for row in rows:
        v1 = _shell_verdict(row.n, row.r1, row.lam1, row.N1, row.t)
        v2 = _shell_verdict(row.n, row.r2, row.lam2, row.N2, row.t)
        out.append(replace(row, verdicts=(v1, v2)))
    return out


def row_ruled_out(row: FeasibleRow) -> bool:
    return any(v.outcome == "RuledOut" for v in row.verdicts)


TSV_HEADER = "n\tr1\tr2\tN1\tN2\tlam1\tlam2\tratio\tpairs\tcase\tstar\tverdicts"


def rows_to_tsv(rows, header: bool = True) -> str:
    lines = [TSV_HEADER] if header else []
    for row in rows:
        pairs = ";".join(f"({x},{y})" for x, y in row.pairs) or "-"
        verdicts = (
            ";".join(
                f"r{r}.{v.test}={v.outcome}"
                for r, v in zip((row.r1, row.r2), row.verdicts)
            )
            or "-"
        )
        lines.append(
            "\t".join(
                (
                    str(row.n),
                    str(row.r1),
                    str(row.r2),
                    str(row.N1),
                    str(row.N2),
                    str(row.lam1),
                    str(row.lam2),
                    f"{row.ratio.numerator}/{row.ratio.denominator}",
                    pairs,
                    str(row.case) if row.case else "-",
                    "*" if row.star else "-",
                    verdicts,
                )
            )
        )
    return "\n".join(lines) + "\n"
