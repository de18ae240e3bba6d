"""Exact integer arithmetic on the character lattice X(T) and its dual.

Weights and coweights are plain tuples of Python ints (arbitrary
precision).  All linear algebra here is over Z; canonical bases are
returned in row-style Hermite normal form so that equal lattices have
equal representations.
"""

from __future__ import annotations

from typing import Iterable, List, Sequence, Tuple

Weight = Tuple[int, ...]
Coweight = Tuple[int, ...]


class DimensionMismatch(ValueError):
    """Vectors of unequal length were combined."""


def check_rank(vec: Sequence[int], rank: int) -> None:
    if len(vec) != rank:
        raise DimensionMismatch(
            "expected length %d, got %d: %r" % (rank, len(vec), tuple(vec))
        )


def zero(rank: int) -> Weight:
    return (0,) * rank


def add(a: Weight, b: Weight) -> Weight:
    if len(a) != len(b):
        raise DimensionMismatch("cannot add %r and %r" % (a, b))
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Weight, b: Weight) -> Weight:
    if len(a) != len(b):
        raise DimensionMismatch("cannot subtract %r and %r" % (a, b))
    return tuple(x - y for x, y in zip(a, b))


def neg(a: Weight) -> Weight:
    return tuple(-x for x in a)


def scale(c: int, a: Weight) -> Weight:
    return tuple(c * x for x in a)


def is_zero(a: Weight) -> bool:
    return all(x == 0 for x in a)


def pair(lam: Weight, cov: Coweight) -> int:
    """Perfect pairing X(T) x X(T)^v -> Z, i.e. the integer dot product."""
    if len(lam) != len(cov):
        raise DimensionMismatch("cannot pair %r with %r" % (lam, cov))
    return sum(a * b for a, b in zip(lam, cov))


def _xgcd(a: int, b: int) -> Tuple[int, int, int]:
    # Returns (x, y, g) with x*a + y*b == g == gcd(a, b), g >= 0 when a,b not both 0.
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


def hnf(rows: Iterable[Sequence[int]]) -> List[Weight]:
    """Row-style Hermite normal form of the lattice spanned by ``rows``.

    Pivots are positive, entries above a pivot are reduced into
    [0, pivot), zero rows are dropped.  The result is a canonical basis
    of the row lattice.
    """
    mat = [list(r) for r in rows]
    mat = [r for r in mat if any(r)]
    if not mat:
        return []
    ncols = len(mat[0])
    for r in mat:
        if len(r) != ncols:
            raise DimensionMismatch("ragged rows in hnf input")
    pivot_row = 0
    pivots: List[Tuple[int, int]] = []
    for col in range(ncols):
        # Eliminate everything below pivot_row in this column via gcd steps.
        nonzero = [i for i in range(pivot_row, len(mat)) if mat[i][col]]
        if not nonzero:
            continue
        i0 = nonzero[0]
        mat[pivot_row], mat[i0] = mat[i0], mat[pivot_row]
        for i in range(pivot_row + 1, len(mat)):
            if not mat[i][col]:
                continue
            a, b = mat[pivot_row][col], mat[i][col]
            x, y, g = _xgcd(a, b)
            ag, bg = a // g, b // g
            ri, rp = mat[i], mat[pivot_row]
            for j in range(ncols):
                rp[j], ri[j] = x * rp[j] + y * ri[j], ag * ri[j] - bg * rp[j]
        if mat[pivot_row][col] < 0:
            mat[pivot_row] = [-v for v in mat[pivot_row]]
        pivots.append((pivot_row, col))
        pivot_row += 1
        if pivot_row == len(mat):
            break
    mat = mat[:pivot_row]
    # Reduce entries above each pivot.
    for prow, pcol in reversed(pivots):
        piv = mat[prow][pcol]
        for i in range(prow):
            q = mat[i][pcol] // piv
            if q:
                mat[i] = [a - q * b for a, b in zip(mat[i], mat[prow])]
    return [tuple(r) for r in mat]


def integer_kernel(vectors: Sequence[Sequence[int]], rank: int) -> List[Weight]:
    """Basis (HNF rows) of {x in Z^rank : dot(x, v) == 0 for all v}.

    Equal to :func:`pairing_kernel`; kept as the generic name for reuse
    outside the weight/coweight pairing context.
    """
    for v in vectors:
        check_rank(v, rank)
    if not vectors:
        return [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    k = len(vectors)
    # Rows [image | identity]; unimodular row ops; zero image part => kernel row.
    aug = [
        [vectors[t][i] for t in range(k)] + [1 if j == i else 0 for j in range(rank)]
        for i in range(rank)
    ]
    # Column-by-column gcd elimination on the image part.
    pivot_row = 0
    for col in range(k):
        nonzero = [i for i in range(pivot_row, rank) if aug[i][col]]
        if not nonzero:
            continue
        i0 = nonzero[0]
        aug[pivot_row], aug[i0] = aug[i0], aug[pivot_row]
        for i in range(pivot_row + 1, rank):
            if not aug[i][col]:
                continue
            a, b = aug[pivot_row][col], aug[i][col]
            x, y, g = _xgcd(a, b)
            ag, bg = a // g, b // g
            ri, rp = aug[i], aug[pivot_row]
            for j in range(k + rank):
                rp[j], ri[j] = x * rp[j] + y * ri[j], ag * ri[j] - bg * rp[j]
        pivot_row += 1
        if pivot_row == rank:
            break
    kernel_rows = [r[k:] for r in aug if not any(r[:k])]
    return hnf(kernel_rows)


def pairing_kernel(covs: Sequence[Coweight], rank: int) -> List[Weight]:
    """Integral basis of {lam : pair(lam, c) == 0 for every c in covs}."""
    return integer_kernel(covs, rank)


def saturate(rows: Sequence[Sequence[int]], rank: int) -> List[Weight]:
    """Saturation of the row lattice: (span_Q(rows)) intersected with Z^rank."""
    ortho = integer_kernel(rows, rank)
    return integer_kernel(ortho, rank)


def in_lattice(vec: Sequence[int], basis: Sequence[Sequence[int]]) -> bool:
    """Whether ``vec`` is an integer combination of the (HNF) basis rows."""
    if not basis:
        return not any(vec)
    rank = len(basis[0])
    check_rank(vec, rank)
    residue = list(vec)
    rows = hnf(basis)
    for row in rows:
        col = next((j for j, v in enumerate(row) if v), None)
        if col is None:
            continue
        if residue[col] % row[col] != 0:
            return False
        q = residue[col] // row[col]
        residue = [a - q * b for a, b in zip(residue, row)]
    return not any(residue)
