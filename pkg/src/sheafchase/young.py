"""Exact partition / Schur-functor combinatorics.

Partitions are plain tuples of ints, weakly decreasing, trailing zeros
trimmed.  Generalized weights (possibly negative, fixed length) are also
plain tuples; they never enter the diagram algorithms directly, only via a
uniform shift.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb
from typing import Iterator, Sequence

Partition = tuple[int, ...]
Weight = tuple[int, ...]


def trim(parts: Sequence[int]) -> Partition:
    """Canonical form: drop trailing zeros."""
    parts = tuple(parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def check_partition(parts: Sequence[int]) -> Partition:
    """Validate a Young diagram (weakly decreasing, nonnegative) and trim it."""
    parts = tuple(parts)
    for i in range(len(parts) - 1):
        if parts[i] < parts[i + 1]:
            raise ValueError(f"not weakly decreasing: {parts}")
    if parts and parts[-1] < 0:
        raise ValueError(f"negative part in Young diagram: {parts}")
    return trim(parts)


def is_weakly_decreasing(w: Sequence[int]) -> bool:
    return all(w[i] >= w[i + 1] for i in range(len(w) - 1))


def size(parts: Sequence[int]) -> int:
    return sum(parts)


def conjugate(lam: Sequence[int]) -> Partition:
    """Transpose the Young diagram."""
    lam = check_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def partitions_of(n: int, max_rows: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n with at most max_rows rows and parts <= max_part."""
    if max_part is None:
        max_part = n

    def rec(rest: int, rows: int, cap: int, acc: tuple[int, ...]) -> Iterator[Partition]:
        if rest == 0:
            yield acc
            return
        if rows == 0:
            return
        for p in range(min(rest, cap), 0, -1):
            yield from rec(rest - p, rows - 1, p, acc + (p,))

    yield from rec(n, max_rows, max_part, ())


def _count_lr_tableaux(outer: Partition, inner: Partition, content: Partition) -> int:
    """Number of Littlewood-Richardson skew tableaux of shape outer/inner
    with the given content (lattice-word condition on the reverse reading
    word)."""
    rows = len(outer)
    inner_p = tuple(inner) + (0,) * (rows - len(inner))
    cells = []  # reverse reading order: rows top->bottom, columns right->left
    for r in range(rows):
        for c in range(outer[r] - 1, inner_p[r] - 1, -1):
            cells.append((r, c))
    grid: dict[tuple[int, int], int] = {}
    counts = [0] * (len(content) + 1)  # counts[v] for values 1..len(content)

    def fill(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        lo, hi = 1, len(content)
        right = grid.get((r, c + 1))
        if right is not None:
            hi = min(hi, right)  # row weakly increasing left-to-right
        above = grid.get((r - 1, c))
        if above is not None:
            lo = max(lo, above + 1)  # columns strictly increasing
        total = 0
        for v in range(lo, hi + 1):
            if counts[v] >= content[v - 1]:
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue  # lattice word condition
            counts[v] += 1
            grid[(r, c)] = v
            total += fill(idx + 1)
            del grid[(r, c)]
            counts[v] -= 1
        return total

    return fill(0)


def lr_decompose(lam: Sequence[int], mu: Sequence[int], rank_cap: int) -> Counter[Partition]:
    """Littlewood-Richardson decomposition of S_lam V (x) S_mu V for
    dim V = rank_cap; partitions with more than rank_cap rows are dropped."""
    if rank_cap <= 0:
        raise ValueError("rank_cap must be positive")
    lam = check_partition(lam)
    mu = check_partition(mu)
    if not mu:
        return Counter({lam: 1}) if len(lam) <= rank_cap else Counter()
    if not lam:
        return Counter({mu: 1}) if len(mu) <= rank_cap else Counter()
    out: Counter[Partition] = Counter()
    n = size(lam) + size(mu)
    for nu in partitions_of(n, rank_cap, lam[0] + mu[0]):
        rows = len(nu)
        if any(nu[i] < lam[i] for i in range(min(rows, len(lam)))):
            continue
        if len(lam) > rows:
            continue
        mult = _count_lr_tableaux(nu, lam, mu)
        if mult:
            out[nu] = mult
    return out


def wedge_product_decompose(i_list: Sequence[int], bundle_rank: int) -> Counter[Partition]:
    """Decompose a tensor product of exterior powers of a rank
    ``bundle_rank`` space into Schur functors."""
    if bundle_rank <= 0:
        raise ValueError("bundle_rank must be positive")
    for i in i_list:
        if i < 0 or i > bundle_rank:
            raise ValueError(f"exterior degree {i} outside [0, {bundle_rank}]")
    acc: Counter[Partition] = Counter({(): 1})
    for i in i_list:
        if i == 0:
            continue
        col: Partition = (1,) * i
        nxt: Counter[Partition] = Counter()
        for lam, m in acc.items():
            for nu, m2 in lr_decompose(lam, col, bundle_rank).items():
                nxt[nu] += m * m2
        acc = nxt
    return acc


def cauchy_wedge(q: int, rank_a: int, rank_b: int) -> Counter[tuple[Partition, Partition]]:
    """Exterior power of a tensor product: pairs (lam, lam') over partitions
    of q fitting in the rank_a x rank_b box, each with multiplicity 1."""
    out: Counter[tuple[Partition, Partition]] = Counter()
    if q < 0 or q > rank_a * rank_b:
        return out
    if q == 0:
        out[((), ())] = 1
        return out
    for lam in partitions_of(q, rank_a, rank_b):
        out[(lam, conjugate(lam))] = 1
    return out


def sym_power_split(degrees: Sequence[int], j: int) -> Counter[int]:
    """Twists of the j-th symmetric power of a direct sum of line bundles."""
    if j < 0:
        raise ValueError("symmetric power degree must be nonnegative")
    out: Counter[int] = Counter()
    for combo in combinations_with_replacement(degrees, j):
        out[sum(combo)] += 1
    return out


def weight_dim(w: Sequence[int]) -> int:
    """Weyl dimension of the GL(len(w)) irreducible with highest weight w
    (w weakly decreasing, entries may be negative)."""
    w = tuple(w)
    if not is_weakly_decreasing(w):
        raise ValueError(f"weight not weakly decreasing: {w}")
    r = len(w)
    d = Fraction(1)
    for i in range(r):
        for j in range(i + 1, r):
            d *= Fraction(w[i] - w[j] + j - i, j - i)
    assert d.denominator == 1
    return int(d)


def schur_dim(lam: Sequence[int], rank: int) -> int:
    """Dimension of S_lam applied to a rank ``rank`` space: the number of
    semistandard Young tableaux of shape lam with entries in 1..rank."""
    if rank <= 0:
        raise ValueError("rank must be positive")
    lam = check_partition(lam)
    if len(lam) > rank:
        return 0
    return weight_dim(tuple(lam) + (0,) * (rank - len(lam)))


def count_ssyt(lam: Sequence[int], rank: int) -> int:
    """Independent oracle for schur_dim: direct enumeration of semistandard
    tableaux."""
    lam = check_partition(lam)
    if not lam:
        return 1
    if len(lam) > rank:
        return 0
    rows = len(lam)

    def fill(r: int, c: int, grid: dict[tuple[int, int], int]) -> int:
        if r == rows:
            return 1
        nr, nc = (r, c + 1) if c + 1 < lam[r] else (r + 1, 0)
        lo = 1
        if c > 0:
            lo = max(lo, grid[(r, c - 1)])
        if r > 0 and c < lam[r - 1]:
            lo = max(lo, grid[(r - 1, c)] + 1)
        total = 0
        for v in range(lo, rank + 1):
            grid[(r, c)] = v
            total += fill(nr, nc, grid)
            del grid[(r, c)]
        return total

    return fill(0, 0, {})


def dual_weight(w: Sequence[int]) -> Weight:
    """Highest weight of the dual representation: negate and reverse."""
    return tuple(-x for x in reversed(tuple(w)))


def tensor_weights(w1: Sequence[int], w2: Sequence[int], rank: int) -> Counter[Weight]:
    """Tensor product of two GL(rank) irreducibles given by weakly
    decreasing weights of length rank; computed by shifting to partitions
    and applying Littlewood-Richardson."""
    w1, w2 = tuple(w1), tuple(w2)
    if len(w1) != rank or len(w2) != rank:
        raise ValueError("weights must have length equal to the rank")
    s1 = -min(w1[-1], 0)
    s2 = -min(w2[-1], 0)
    p1 = trim(tuple(x + s1 for x in w1))
    p2 = trim(tuple(x + s2 for x in w2))
    out: Counter[Weight] = Counter()
    for nu, m in lr_decompose(p1, p2, rank).items():
        padded = tuple(nu) + (0,) * (rank - len(nu))
        out[tuple(x - s1 - s2 for x in padded)] += m
    return out


def binomial(a: int, b: int) -> int:
    """comb with the conventional zero outside the Pascal triangle."""
    if b < 0 or a < b:
        return 0
    return comb(a, b)
