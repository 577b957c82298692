"""Block designs on points 0..n-1: counting, verification, transforms,
and two classical constructions (quadratic-residue translates, the
4-(23,7,1) design from the length-23 residue code).

Blocks are stored as int bitsets, so membership tests and complements are
single integer operations.  All counting is exact; weighted counts use
fractions.Fraction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

MAX_POINTS = 128  # blocks fit in two machine words


class FormatError(ValueError):
    """A design file violates its declared text format."""


def bits_of(mask: int) -> tuple[int, ...]:
    """Positions of set bits, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def mask_of(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


@dataclass(frozen=True)
class Design:
    """Multiset of blocks on the point set {0,...,n-1}.

    The block list is kept in a canonical order (lexicographic on the
    ascending index sequence of each block), so two Designs are equal
    exactly when their block lists are equal.  Duplicate blocks are
    permitted and preserved.
    """

    n: int
    blocks: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_POINTS:
            raise ValueError(f"point count must be in 1..{MAX_POINTS}, got {self.n}")
        blocks = tuple(sorted((int(b) for b in self.blocks), key=bits_of))
        for b in blocks:
            if b < 0 or b >> self.n:
                raise ValueError("block contains a point index outside 0..n-1")
        object.__setattr__(self, "blocks", blocks)

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    def block_sizes(self) -> set[int]:
        return {b.bit_count() for b in self.blocks}

    def uniform_size(self) -> int:
        """The common block size; raises when sizes are mixed or no blocks exist."""
        sizes = self.block_sizes()
        if len(sizes) != 1:
            raise ValueError("design does not have a single uniform block size")
        return next(iter(sizes))


@dataclass(frozen=True)
class DesignParams:
    """Parameter tuple of a t-(v,k,lam) design."""

    v: int
    k: int
    lam: int
    t: int = 2

    def __post_init__(self):
        if not 0 < self.t <= self.k <= self.v:
            raise ValueError("need 0 < t <= k <= v")
        if self.lam < 1:
            raise ValueError("lam must be >= 1")


# ---------------------------------------------------------------------------
# file format
#
# DESIGN v1 (UTF-8 text):
#   line 1: DESIGN v1
#   line 2: n=<int> b=<int>
#   then exactly b lines, each a strictly increasing space-separated
#   list of 0-based point indices.


def load_design(path) -> Design:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    lines = text.splitlines()
    # tolerate trailing blank lines only
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines or lines[0].strip() != "DESIGN v1":
        raise FormatError(f"{path}: missing 'DESIGN v1' header")
    if len(lines) < 2:
        raise FormatError(f"{path}: missing size line")
    n, b = _parse_size_line(lines[1], ("n", "b"), path)
    body = lines[2:]
    if len(body) != b:
        raise FormatError(f"{path}: declared b={b} but found {len(body)} block lines")
    blocks = [parse_block_line(line, n, path) for line in body]
    return Design(n, tuple(blocks))


def _parse_size_line(line: str, keys: tuple[str, str], path) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise FormatError(f"{path}: malformed size line {line!r}")
    vals = []
    for part, key in zip(parts, keys):
        if not part.startswith(key + "="):
            raise FormatError(f"{path}: expected '{key}=<int>' in {line!r}")
        try:
            vals.append(int(part[len(key) + 1 :]))
        except ValueError:
            raise FormatError(f"{path}: bad integer in {line!r}") from None
    return vals[0], vals[1]


def parse_block_line(line: str, n: int, path="<string>") -> int:
    try:
        idx = [int(tok) for tok in line.split()]
    except ValueError:
        raise FormatError(f"{path}: non-integer token in block line {line!r}") from None
    if not idx:
        raise FormatError(f"{path}: empty block line")
    for a, b in zip(idx, idx[1:]):
        if b <= a:
            raise FormatError(f"{path}: indices not strictly increasing in {line!r}")
    if idx[0] < 0 or idx[-1] >= n:
        raise FormatError(f"{path}: point index out of range in {line!r}")
    return mask_of(idx)


def design_text(design: Design) -> str:
    lines = ["DESIGN v1", f"n={design.n} b={design.num_blocks}"]
    lines.extend(" ".join(str(i) for i in bits_of(b)) for b in design.blocks)
    return "\n".join(lines) + "\n"


def save_design(design: Design, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(design_text(design))


# ---------------------------------------------------------------------------
# counting and verification


def lambda_count(design: Design, subset) -> int:
    """Number of blocks containing every point of `subset`, with multiplicity.

    `subset` is an iterable of point indices, or an int bitmask.
    """
    m = subset if isinstance(subset, int) else mask_of(subset)
    if m < 0 or m >> design.n:
        raise ValueError("subset contains a point index outside 0..n-1")
    return sum(1 for b in design.blocks if b & m == m)


def coverage_map(design: Design, j: int) -> dict[tuple[int, ...], int]:
    """Coverage count of every j-subset that lies in at least one block.

    Keys are ascending index tuples; subsets covered by no block are absent.
    Built by incrementing the C(size,j) sub-subsets of each block, which is
    far cheaper than scanning all C(n,j) subsets against the block list.
    """
    counts: dict[tuple[int, ...], int] = {}
    for b in design.blocks:
        for sub in combinations(bits_of(b), j):
            counts[sub] = counts.get(sub, 0) + 1
    return counts


def is_t_design(design: Design, t: int):
    """Whether every j-subset (j=1..t) lies in a constant number of blocks.

    Returns (True, [lam_0, ..., lam_t]) with lam_0 the block count, or
    (False, None).  Blocks must all have one size r >= t.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    if design.num_blocks == 0:
        return True, [0] * (t + 1)
    r = design.uniform_size()
    if t > r:
        raise ValueError("t exceeds the block size")
    lams = [design.num_blocks]
    for j in range(1, t + 1):
        counts = coverage_map(design, j)
        if len(counts) < math.comb(design.n, j):
            return False, None  # some j-subset is uncovered while others are not
        vals = set(counts.values())
        if len(vals) != 1:
            return False, None
        lams.append(vals.pop())
    return True, lams


def is_regular_twise_balanced(design: Design, weights, t: int):
    """Weighted balance check for a design with possibly mixed block sizes.

    `weights` maps block size to a positive weight.  True iff the weighted
    coverage sum of every j-subset is constant for each j = 1..t; the
    balanced case returns [lam_1, ..., lam_t] as exact Fractions.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    sizes = design.block_sizes()
    wmap = {}
    for s in sizes:
        if s not in weights:
            raise ValueError(f"no weight given for block size {s}")
        w = Fraction(weights[s])
        if w <= 0:
            raise ValueError("weights must be positive")
        wmap[s] = w
    # scale to integers so the inner loop stays in int arithmetic
    scale = math.lcm(*(w.denominator for w in wmap.values())) if wmap else 1
    iw = {s: int(w * scale) for s, w in wmap.items()}
    lams = []
    for j in range(1, t + 1):
        counts: dict[tuple[int, ...], int] = {}
        for b in design.blocks:
            w = iw[b.bit_count()]
            for sub in combinations(bits_of(b), j):
                counts[sub] = counts.get(sub, 0) + w
        if not counts:
            lams.append(Fraction(0))
            continue
        if len(counts) < math.comb(design.n, j):
            return False, None
        vals = set(counts.values())
        if len(vals) != 1:
            return False, None
        lams.append(Fraction(vals.pop(), scale))
    return True, lams


# ---------------------------------------------------------------------------
# transforms


def complement(design: Design) -> Design:
    """Replace every block by its set complement in {0,...,n-1}."""
    full = (1 << design.n) - 1
    return Design(design.n, tuple(full ^ b for b in design.blocks))


def _delete_point(mask: int, point: int) -> int:
    low = (1 << point) - 1
    return (mask & low) | ((mask >> 1) & ~low)


def derived(design: Design, point: int) -> Design:
    """Blocks through `point`, with the point removed and the rest renumbered."""
    if not 0 <= point < design.n:
        raise ValueError("point index out of range")
    bit = 1 << point
    kept = tuple(_delete_point(b ^ bit, point) for b in design.blocks if b & bit)
    return Design(design.n - 1, kept)


def residual(design: Design, point: int) -> Design:
    """Blocks avoiding `point`, renumbered onto n-1 points."""
    if not 0 <= point < design.n:
        raise ValueError("point index out of range")
    bit = 1 << point
    kept = tuple(_delete_point(b, point) for b in design.blocks if not b & bit)
    return Design(design.n - 1, kept)


def extend_pair(d_r: Design, d_r1: Design) -> Design:
    """Adjoin a new point to every block of d_r and merge with d_r1.

    Both inputs live on the same n points and have uniform block sizes r and
    r+1; the result lives on n+1 points, the new point having index n.  No
    balance verification is performed here.
    """
    if d_r.n != d_r1.n:
        raise ValueError("designs live on different point counts")
    r = d_r.uniform_size()
    r1 = d_r1.uniform_size()
    if r1 != r + 1:
        raise ValueError(f"block sizes must be r and r+1, got {r} and {r1}")
    new_bit = 1 << d_r.n
    blocks = tuple(b | new_bit for b in d_r.blocks) + d_r1.blocks
    return Design(d_r.n + 1, blocks)


# ---------------------------------------------------------------------------
# constructions


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True


def construct_paley_hadamard(q: int) -> Design:
    """Symmetric 2-(q, (q-1)/2, (q-3)/4) design from quadratic residues mod q.

    q must be a prime with q % 4 == 3; block x is the translate x + R of the
    set R of nonzero quadratic residues.
    """
    if q % 4 != 3 or not _is_prime(q):
        raise ValueError("q must be a prime congruent to 3 mod 4")
    residues = {pow(x, 2, q) for x in range(1, q)}
    blocks = tuple(mask_of((x + s) % q for s in residues) for x in range(q))
    return Design(q, blocks)


def construct_witt_23() -> Design:
    """The 253 blocks of a 4-(23,7,1) design.

    Blocks are the supports of the weight-7 codewords of the binary [23,12,7]
    quadratic-residue code: the cyclic shifts of the residue indicator span a
    12-dimensional space over GF(2), and its 4096 codewords contain exactly
    253 of weight 7.
    """
    n = 23
    full = (1 << n) - 1
    residues = {pow(x, 2, n) for x in range(1, n)}
    gen = mask_of(residues)
    shifts = [((gen << s) | (gen >> (n - s))) & full for s in range(n)]
    basis: dict[int, int] = {}
    for row in shifts:
        cur = row
        while cur:
            top = cur.bit_length() - 1
            if top not in basis:
                basis[top] = cur
                break
            cur ^= basis[top]
    if len(basis) != 12:
        raise RuntimeError(f"residue shifts span dimension {len(basis)}, expected 12")
    code = [0]
    for vec in basis.values():
        code += [c ^ vec for c in code]
    blocks = tuple(c for c in code if c.bit_count() == 7)
    if len(blocks) != 253:
        raise RuntimeError(f"found {len(blocks)} weight-7 codewords, expected 253")
    return Design(n, blocks)
