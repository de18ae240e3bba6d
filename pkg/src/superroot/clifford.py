"""Weight bilinear forms on the odd Cartan and the size of the attached
simple supermodule over an algebraically closed field.

The Gram matrix of a weight ``lam`` has entries lam([K_s, K_t]) computed
in the matrix model; over a closed field the simple supermodule of the
corresponding Clifford superalgebra has dimension 2^ceil(rank/2), of
type M for even rank and type Q for odd rank.  Over non-closed fields
the dimension can grow (division superalgebras); callers can consult
:func:`may_fail_absolute_simplicity` for the flag.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from . import lattice
from .lattice import Weight
from .liesuper import LieSuperAlgebra, eval_weight_on_cartan
from .rootdata import ParameterError, SuperRootDatum, is_odd_prime


@dataclass(frozen=True)
class CliffordForm:
    gram: Tuple[Tuple[int, ...], ...]
    lam: Weight
    char_p: int

    @property
    def size(self) -> int:
        return len(self.gram)


def gram_form(L: LieSuperAlgebra, lam: Weight, char_p: int = 0) -> CliffordForm:
    """Gram matrix (s,t) -> lam([K_s, K_t]) on the odd Cartan basis,
    reduced to [0, p) when char_p is positive."""
    if char_p != 0 and not is_odd_prime(char_p):
        raise ParameterError("char_p must be 0 or an odd prime, got %r" % (char_p,))
    lattice.check_rank(lam, L.rank)
    ks = L.odd_cartan()
    size = len(ks)
    gram: List[List[int]] = [[0] * size for _ in range(size)]
    for s in range(size):
        for t in range(size):
            value = eval_weight_on_cartan(L, lam, L.bracket(ks[s], ks[t]))
            gram[s][t] = value % char_p if char_p else value
    form = CliffordForm(tuple(tuple(row) for row in gram), tuple(lam), char_p)
    for s in range(size):
        for t in range(size):
            if form.gram[s][t] != form.gram[t][s]:
                raise ParameterError("gram matrix is not symmetric")
    return form


def _rank_rational(gram: Tuple[Tuple[int, ...], ...]) -> int:
    rows = [[Fraction(v) for v in row] for row in gram]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                c = rows[i][col] / rows[rank][col]
                rows[i] = [a - c * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def _rank_mod_p(gram: Tuple[Tuple[int, ...], ...], p: int) -> int:
    rows = [[v % p for v in row] for row in gram]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                c = rows[i][col] * inv % p
                rows[i] = [(a - c * b) % p for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def form_rank(form: CliffordForm) -> int:
    """Rank of the Gram matrix over the coefficient field."""
    if not form.gram:
        return 0
    if form.char_p:
        return _rank_mod_p(form.gram, form.char_p)
    return _rank_rational(form.gram)


def u_lambda_dim_closed(form: CliffordForm) -> Tuple[int, str]:
    """Dimension and type (M or Q) of the simple supermodule of the
    Clifford superalgebra of the form, over an algebraically closed field."""
    rank = form_rank(form)
    dim = 2 ** ((rank + 1) // 2)
    kind = "M" if rank % 2 == 0 else "Q"
    return dim, kind


def may_fail_absolute_simplicity(datum: SuperRootDatum) -> bool:
    """True when the root system contains weight zero (nontrivial odd
    Cartan): simple supermodules need not stay simple under base change."""
    return datum.h_odd_dim > 0
