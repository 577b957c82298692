"""Eigenvalue arithmetic for the binary Hamming scheme H(n,2) and the
moment-identity oracle for weighted designs supported on two shells.

The base point is the all-zeros word, so shell X_r is the set of weight-r
words and a block B (a subset of coordinates) stands for its indicator
word.  The oracle checks, for every coordinate subset S with 1 <= |S| <= t,
that the weighted sum over the chosen blocks of

    Q1(r-1)^{|B cap S|} * Q1(r+1)^{|S|-|B cap S|}

matches the same product summed over the *entire* shell, scaled by
w * N / C(n,r).  Q1 is the degree-1 Krawtchouk polynomial; the distance
from a weight-1 word e_i to a weight-r word x is r-1 or r+1 according to
whether coordinate i lies in the support of x, which is what makes the
per-block product a function of |B cap S| alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, islice

import numpy as np

from .designs import Design, FormatError, parse_block_line

__all__ = [
    "RelativeCandidate",
    "krawtchouk",
    "shell_moment",
    "relative_design_oracle",
    "load_candidate",
    "save_candidate",
]


def krawtchouk(n: int, k: int, x: int) -> int:
    """Q_k(x) on H(n,2), as an exact integer.

    Q_k(x) = sum_j (-1)^j C(x,j) C(n-x,k-j).
    """
    if not 0 <= k <= n or not 0 <= x <= n:
        raise ValueError("need 0 <= k <= n and 0 <= x <= n")
    return sum(
        (-1) ** j * math.comb(x, j) * math.comb(n - x, k - j)
        for j in range(0, k + 1)
    )


def shell_moment(n: int, s: int, r: int) -> int:
    """Sum over the whole shell X_r of the degree-1 product for s coordinates.

    Equals sum_{l=0}^{s} C(s,l) C(n-s,r-l) Q1(r-1)^l Q1(r+1)^{s-l}; the value
    does not depend on which s distinct coordinates are chosen.
    """
    if not 1 <= s <= n:
        raise ValueError("need 1 <= s <= n")
    if not 1 <= r <= n - 1:
        raise ValueError("need 1 <= r <= n-1")
    a = n - 2 * (r - 1)  # Q1(r-1)
    b = n - 2 * (r + 1)  # Q1(r+1)
    total = 0
    for l in range(0, s + 1):
        if r - l < 0:
            break
        total += math.comb(s, l) * math.comb(n - s, r - l) * a**l * b ** (s - l)
    return total


@dataclass(frozen=True)
class RelativeCandidate:
    """Two weighted shells of H(n,2).

    design1/design2 have uniform block sizes r1 < r2 on the same n points;
    w1/w2 are the positive per-shell weights.  Construction through
    from_designs enforces the nontrivial window 2 <= r1 < r2 <= n-2 unless
    allow_trivial is set; building the dataclass directly skips only that
    window check.
    """

    n: int
    r1: int
    r2: int
    design1: Design
    design2: Design
    w1: Fraction
    w2: Fraction

    def __post_init__(self):
        object.__setattr__(self, "w1", Fraction(self.w1))
        object.__setattr__(self, "w2", Fraction(self.w2))
        if self.design1.n != self.n or self.design2.n != self.n:
            raise ValueError("both shell designs must live on the same n points")
        if self.design1.num_blocks == 0 or self.design2.num_blocks == 0:
            raise ValueError("each shell needs at least one block")
        if self.design1.uniform_size() != self.r1 or self.design2.uniform_size() != self.r2:
            raise ValueError("declared shell ranks do not match the block sizes")
        if not self.r1 < self.r2:
            raise ValueError("shell ranks must satisfy r1 < r2")
        if self.w1 <= 0 or self.w2 <= 0:
            raise ValueError("shell weights must be positive")

    @classmethod
    def from_designs(cls, d_a: Design, d_b: Design, w_a=1, w_b=1, allow_trivial=False):
        """Build a candidate from two uniform designs, ordering shells by size."""
        if d_a.n != d_b.n:
            raise ValueError("designs live on different point counts")
        ra, rb = d_a.uniform_size(), d_b.uniform_size()
        if ra == rb:
            raise ValueError("the two shells must have different ranks")
        if ra > rb:
            d_a, d_b, w_a, w_b, ra, rb = d_b, d_a, w_b, w_a, rb, ra
        if not allow_trivial and not (2 <= ra and rb <= d_a.n - 2):
            raise ValueError(
                f"shells ({ra},{rb}) leave the window 2 <= r1 < r2 <= n-2; "
                "pass allow_trivial to accept"
            )
        return cls(d_a.n, ra, rb, d_a, d_b, Fraction(w_a), Fraction(w_b))

    @property
    def total_size(self) -> int:
        return self.design1.num_blocks + self.design2.num_blocks

    def shells(self):
        return (
            (self.r1, self.design1, self.w1),
            (self.r2, self.design2, self.w2),
        )

    def union_design(self) -> Design:
        """Both shells merged into one mixed-size design."""
        return Design(self.n, self.design1.blocks + self.design2.blocks)

    def weight_by_size(self) -> dict[int, Fraction]:
        return {self.r1: self.w1, self.r2: self.w2}


# ---------------------------------------------------------------------------
# file format
#
# RELDESIGN v1 (UTF-8 text):
#   line 1: RELDESIGN v1
#   line 2: n=<int> t=<int>
#   then two shell sections in increasing r order, each
#     shell r=<int> w=<p>/<q>
#   followed by that shell's block lines (one strictly increasing index
#   list per line).


def load_candidate(path, allow_trivial: bool = False):
    """Parse a RELDESIGN v1 file; returns (RelativeCandidate, t)."""
    with open(path, "r", encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines or lines[0].strip() != "RELDESIGN v1":
        raise FormatError(f"{path}: missing 'RELDESIGN v1' header")
    if len(lines) < 2:
        raise FormatError(f"{path}: missing size line")
    head = lines[1].split()
    if len(head) != 2 or not head[0].startswith("n=") or not head[1].startswith("t="):
        raise FormatError(f"{path}: expected 'n=<int> t=<int>', got {lines[1]!r}")
    try:
        n = int(head[0][2:])
        t = int(head[1][2:])
    except ValueError:
        raise FormatError(f"{path}: bad integer in {lines[1]!r}") from None
    if t < 1:
        raise FormatError(f"{path}: t must be >= 1")

    shells = []  # (r, weight, [block masks])
    current = None
    for line in lines[2:]:
        if not line.strip():
            raise FormatError(f"{path}: blank line inside the body")
        if line.startswith("shell "):
            parts = line.split()
            if len(parts) != 3 or not parts[1].startswith("r=") or not parts[2].startswith("w="):
                raise FormatError(f"{path}: malformed shell line {line!r}")
            try:
                r = int(parts[1][2:])
                w = Fraction(parts[2][2:])
            except (ValueError, ZeroDivisionError):
                raise FormatError(f"{path}: bad shell parameters in {line!r}") from None
            if w <= 0:
                raise FormatError(f"{path}: shell weight must be positive")
            current = (r, w, [])
            shells.append(current)
        else:
            if current is None:
                raise FormatError(f"{path}: block line before any shell line")
            current[2].append(parse_block_line(line, n, path))
    if len(shells) != 2:
        raise FormatError(f"{path}: expected exactly 2 shell sections, found {len(shells)}")
    (ra, wa, blocks_a), (rb, wb, blocks_b) = shells
    if not ra < rb:
        raise FormatError(f"{path}: shell sections must come in increasing r order")
    if not blocks_a or not blocks_b:
        raise FormatError(f"{path}: each shell section needs at least one block line")
    for r, blocks in ((ra, blocks_a), (rb, blocks_b)):
        for b in blocks:
            if b.bit_count() != r:
                raise FormatError(f"{path}: block of size {b.bit_count()} in shell r={r}")
    if not allow_trivial and not (2 <= ra and rb <= n - 2):
        raise FormatError(
            f"{path}: shells ({ra},{rb}) leave the window 2 <= r1 < r2 <= n-2 "
            "(use the trivial-shell override to accept)"
        )
    cand = RelativeCandidate(
        n, ra, rb, Design(n, tuple(blocks_a)), Design(n, tuple(blocks_b)), wa, wb
    )
    return cand, t


def save_candidate(cand: RelativeCandidate, t: int, path) -> None:
    from .designs import bits_of

    with open(path, "w", encoding="utf-8") as fh:
        fh.write("RELDESIGN v1\n")
        fh.write(f"n={cand.n} t={t}\n")
        for r, design, w in cand.shells():
            fh.write(f"shell r={r} w={w.numerator}/{w.denominator}\n")
            for b in design.blocks:
                fh.write(" ".join(str(i) for i in bits_of(b)) + "\n")


# ---------------------------------------------------------------------------
# the oracle


def _bit_matrix(design: Design, n: int) -> np.ndarray:
    mat = np.zeros((design.num_blocks, n), dtype=np.int64)
    for row, b in enumerate(design.blocks):
        for i in range(n):
            if (b >> i) & 1:
                mat[row, i] = 1
    return mat


def _subset_chunks(n: int, s: int, chunk: int):
    it = combinations(range(n), s)
    while True:
        batch = list(islice(it, chunk))
        if not batch:
            return
        yield batch


def relative_design_oracle(cand: RelativeCandidate, t: int, chunk: int = 4096):
    """Check the two-shell moment identity for every subset size s = 1..t.

    Returns (True, None), or (False, (s, subset)) with the lexicographically
    smallest failing coordinate subset.  Subset sizes are scanned in
    ascending order and subsets in lexicographic order, so the witness is
    deterministic.
    """
    n = cand.n
    if not 1 <= t <= n:
        raise ValueError("need 1 <= t <= n")
    scale = math.lcm(cand.w1.denominator, cand.w2.denominator)
    iw = [int(cand.w1 * scale), int(cand.w2 * scale)]
    mats = [_bit_matrix(d, n) for _, d, _ in cand.shells()]

    for s in range(1, t + 1):
        lhs = Fraction(0)
        for r, d, w in cand.shells():
            lhs += w * d.num_blocks * Fraction(shell_moment(n, s, r), math.comb(n, r))
        lhs_scaled = lhs * scale
        if lhs_scaled.denominator != 1:
            # block sums are integers after scaling, so nothing can match
            return False, (s, tuple(range(s)))
        target = lhs_scaled.numerator

        tables = []
        bound = 0
        for (r, d, w), p in zip(cand.shells(), iw):
            a = n - 2 * (r - 1)
            b = n - 2 * (r + 1)
            tbl = [a**c * b ** (s - c) for c in range(s + 1)]
            tables.append(tbl)
            bound += p * d.num_blocks * max(abs(v) for v in tbl)
        if bound < 2**62:
            witness = _oracle_scan_fast(n, s, mats, tables, iw, target, chunk)
        else:
            witness = _oracle_scan_exact(cand, n, s, tables, iw, target)
        if witness is not None:
            return False, (s, witness)
    return True, None


def _oracle_scan_fast(n, s, mats, tables, iw, target, chunk):
    np_tables = [np.array(tbl, dtype=np.int64) for tbl in tables]
    for batch in _subset_chunks(n, s, chunk):
        ind = np.zeros((len(batch), n), dtype=np.int64)
        for row, sub in enumerate(batch):
            ind[row, list(sub)] = 1
        totals = np.zeros(len(batch), dtype=np.int64)
        for mat, tbl, p in zip(mats, np_tables, iw):
            counts = mat @ ind.T  # |B cap S| for every block/subset pair
            totals += p * tbl[counts].sum(axis=0)
        bad = np.nonzero(totals != target)[0]
        if bad.size:
            return batch[int(bad[0])]
    return None


def _oracle_scan_exact(cand, n, s, tables, iw, target):
    # big-integer fallback for sizes where int64 products could overflow
    shell_blocks = [d.blocks for _, d, _ in cand.shells()]
    for sub in combinations(range(n), s):
        m = 0
        for i in sub:
            m |= 1 << i
        total = 0
        for blocks, tbl, p in zip(shell_blocks, tables, iw):
            acc = 0
            for b in blocks:
                acc += tbl[(b & m).bit_count()]
            total += p * acc
        if total != target:
            return sub
    return None
