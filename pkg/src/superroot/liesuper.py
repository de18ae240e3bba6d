"""Matrix Lie superalgebras gl(m|n), q(n), p(n) with exact structure constants.

Each algebra is realized inside Mat(N) over Z with a fixed homogeneous
basis whose matrices have pairwise disjoint supports, so decomposing a
matrix over the basis is exact coordinate reading.  Elements are sparse
coordinate dicts {basis_index: coefficient}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from . import lattice
from .lattice import Weight
from .rootdata import (
    OrderFunctional,
    ParameterError,
    SuperRootDatum,
    positive_system,
    simple_even_roots,
)

EVEN = "even"
ODD = "odd"

Matrix = Tuple[Tuple[int, ...], ...]
Element = Dict[int, int]


class DecompositionError(ValueError):
    """A matrix does not lie in the span of the algebra basis."""


@dataclass(frozen=True)
class BasisElement:
    index: int
    parity: str
    weight: Weight
    matrix: Matrix
    name: str


def _zero_matrix(size: int) -> List[List[int]]:
    return [[0] * size for _ in range(size)]


def _freeze(mat: Sequence[Sequence[int]]) -> Matrix:
    return tuple(tuple(row) for row in mat)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    size = len(a)
    out = _zero_matrix(size)
    for i in range(size):
        arow = a[i]
        orow = out[i]
        for k in range(size):
            if arow[k]:
                c = arow[k]
                brow = b[k]
                for j in range(size):
                    if brow[j]:
                        orow[j] += c * brow[j]
    return _freeze(out)


def mat_add(a: Matrix, b: Matrix, sign: int = 1) -> Matrix:
    return _freeze(
        [[x + sign * y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]
    )


def super_commutator(a: Matrix, b: Matrix, parity_a: str, parity_b: str) -> Matrix:
    sign = -1 if (parity_a == ODD and parity_b == ODD) else 1
    return mat_add(mat_mul(a, b), mat_mul(b, a), -sign)


class LieSuperAlgebra:
    """Finite homogeneous basis plus the exact bracket table."""

    def __init__(self, family: str, rank: int, size: int, basis: List[BasisElement]):
        self.family = family
        self.rank = rank
        self.size = size
        self.basis = basis
        self.dim = len(basis)
        self._anchors: List[Tuple[int, int, int]] = []
        seen = set()
        for b in basis:
            anchor = None
            for i in range(size):
                for j in range(size):
                    if b.matrix[i][j]:
                        if (i, j) in seen:
                            raise ValueError("basis supports are not disjoint")
                        seen.add((i, j))
                        if anchor is None:
                            anchor = (i, j, b.matrix[i][j])
            if anchor is None:
                raise ValueError("zero basis matrix")
            self._anchors.append(anchor)
        self.bracket_table: Dict[Tuple[int, int], Element] = {}
        for x in basis:
            for y in basis:
                mat = super_commutator(x.matrix, y.matrix, x.parity, y.parity)
                coeffs = self.decompose(mat)
                if coeffs:
                    self.bracket_table[(x.index, y.index)] = coeffs

    # -- coordinates ----------------------------------------------------

    def decompose(self, mat: Matrix) -> Element:
        """Exact coordinates of ``mat`` over the basis."""
        coeffs: Element = {}
        residual = [list(row) for row in mat]
        for b, (i, j, v) in zip(self.basis, self._anchors):
            c = residual[i][j] * (1 if v == 1 else -1) if abs(v) == 1 else None
            if c is None:
                # anchors are +-1 for all built-in families
                if residual[i][j] % v:
                    raise DecompositionError("non-integral coordinate")
                c = residual[i][j] // v
            if c:
                coeffs[b.index] = c
                for r in range(self.size):
                    row = b.matrix[r]
                    for s in range(self.size):
                        if row[s]:
                            residual[r][s] -= c * row[s]
        if any(any(row) for row in residual):
            raise DecompositionError("matrix is not in the span of the basis")
        return coeffs

    def element_matrix(self, elem: Mapping[int, int]) -> Matrix:
        out = _zero_matrix(self.size)
        for idx, c in elem.items():
            for i in range(self.size):
                row = self.basis[idx].matrix[i]
                for j in range(self.size):
                    if row[j]:
                        out[i][j] += c * row[j]
        return _freeze(out)

    def as_element(self, x: Union[int, BasisElement, Mapping[int, int]]) -> Element:
        if isinstance(x, BasisElement):
            return {x.index: 1}
        if isinstance(x, int):
            return {x: 1}
        return {k: v for k, v in x.items() if v}

    def parity_of(self, elem: Mapping[int, int]) -> Optional[str]:
        parities = {self.basis[i].parity for i, c in elem.items() if c}
        if not parities:
            return None
        if len(parities) > 1:
            return "mixed"
        return parities.pop()

    # -- bracket --------------------------------------------------------

    def bracket(
        self,
        x: Union[int, BasisElement, Mapping[int, int]],
        y: Union[int, BasisElement, Mapping[int, int]],
    ):
        """Super-commutator of two elements, expanded bilinearly."""
        xe, ye = self.as_element(x), self.as_element(y)
        out: Dict[int, object] = {}
        for i, ci in xe.items():
            for j, cj in ye.items():
                entry = self.bracket_table.get((i, j))
                if not entry:
                    continue
                c = ci * cj
                for k, v in entry.items():
                    out[k] = out.get(k, 0) + c * v
        return {k: v for k, v in out.items() if v}

    # -- weight structure -------------------------------------------------

    def weight_space(self, w: Weight, parity: str) -> List[BasisElement]:
        lattice.check_rank(w, self.rank)
        return [b for b in self.basis if b.parity == parity and b.weight == tuple(w)]

    def odd_cartan(self) -> List[BasisElement]:
        return self.weight_space(lattice.zero(self.rank), ODD)

    def even_cartan(self) -> List[BasisElement]:
        return self.weight_space(lattice.zero(self.rank), EVEN)

    def even_root_vector(self, alpha: Weight) -> BasisElement:
        space = self.weight_space(alpha, EVEN)
        if len(space) != 1:
            raise ParameterError(
                "expected a one-dimensional even root space for %r, found %d"
                % (alpha, len(space))
            )
        return space[0]

    def basis_counts(self) -> Tuple[int, int]:
        n_even = sum(1 for b in self.basis if b.parity == EVEN)
        return n_even, self.dim - n_even


# ---------------------------------------------------------------------------
# Concrete families.


def _diff_weight(rank: int, i: int, j: int) -> Weight:
    return tuple((1 if k == i else 0) - (1 if k == j else 0) for k in range(rank))


def gl_superalgebra(m: int, n: int) -> LieSuperAlgebra:
    if m < 1 or n < 1:
        raise ParameterError("gl(m|n) requires m, n >= 1")
    size = m + n
    basis: List[BasisElement] = []
    odd: List[Tuple[str, Weight, Matrix]] = []
    for i in range(size):
        for j in range(size):
            mat = _zero_matrix(size)
            mat[i][j] = 1
            weight = _diff_weight(size, i, j)
            same_block = (i < m) == (j < m)
            if same_block:
                name = "H_%d" % (i + 1) if i == j else "X[%d,%d]" % (i + 1, j + 1)
                basis.append(
                    BasisElement(len(basis), EVEN, weight, _freeze(mat), name)
                )
            else:
                odd.append(("Y[%d,%d]" % (i + 1, j + 1), weight, _freeze(mat)))
    for name, weight, mat in odd:
        basis.append(BasisElement(len(basis), ODD, weight, mat, name))
    return LieSuperAlgebra("gl(%d|%d)" % (m, n), size, size, basis)


def q_superalgebra(n: int) -> LieSuperAlgebra:
    if n < 1:
        raise ParameterError("q(n) requires n >= 1")
    size = 2 * n
    basis: List[BasisElement] = []
    for i in range(n):
        for j in range(n):
            mat = _zero_matrix(size)
            mat[i][j] = 1
            mat[n + i][n + j] = 1
            name = "H_%d" % (i + 1) if i == j else "X[%d,%d]" % (i + 1, j + 1)
            basis.append(
                BasisElement(len(basis), EVEN, _diff_weight(n, i, j), _freeze(mat), name)
            )
    for i in range(n):
        for j in range(n):
            mat = _zero_matrix(size)
            mat[i][n + j] = 1
            mat[n + i][j] = 1
            name = "K_%d" % (i + 1) if i == j else "Y[%d,%d]" % (i + 1, j + 1)
            basis.append(
                BasisElement(len(basis), ODD, _diff_weight(n, i, j), _freeze(mat), name)
            )
    return LieSuperAlgebra("q(%d)" % n, n, size, basis)


def p_superalgebra(n: int) -> LieSuperAlgebra:
    if n < 2:
        raise ParameterError("p(n) requires n >= 2")
    size = 2 * n
    basis: List[BasisElement] = []
    for i in range(n):
        for j in range(n):
            mat = _zero_matrix(size)
            mat[i][j] = 1
            mat[n + j][n + i] = -1
            name = "H_%d" % (i + 1) if i == j else "X[%d,%d]" % (i + 1, j + 1)
            basis.append(
                BasisElement(len(basis), EVEN, _diff_weight(n, i, j), _freeze(mat), name)
            )
    # symmetric block: weights li + lj (diagonal gives 2*li)
    for i in range(n):
        for j in range(i, n):
            mat = _zero_matrix(size)
            mat[i][n + j] = 1
            if i != j:
                mat[j][n + i] = 1
            weight = tuple(
                (1 if k == i else 0) + (1 if k == j else 0) for k in range(n)
            )
            basis.append(
                BasisElement(
                    len(basis), ODD, weight, _freeze(mat), "B[%d,%d]" % (i + 1, j + 1)
                )
            )
    # antisymmetric block: weights -(li + lj), i < j
    for i in range(n):
        for j in range(i + 1, n):
            mat = _zero_matrix(size)
            mat[n + i][j] = 1
            mat[n + j][i] = -1
            weight = tuple(
                -(1 if k == i else 0) - (1 if k == j else 0) for k in range(n)
            )
            basis.append(
                BasisElement(
                    len(basis), ODD, weight, _freeze(mat), "C[%d,%d]" % (i + 1, j + 1)
                )
            )
    return LieSuperAlgebra("p(%d)" % n, n, size, basis)


def lie_algebra_for(datum: SuperRootDatum) -> LieSuperAlgebra:
    """Instantiate the matrix model named by the datum's lie handle."""
    handle = datum.lie_handle
    if handle is None:
        raise ParameterError("datum %r carries no Lie-algebra handle" % datum.label)
    if handle.startswith("gl(") and "|" in handle:
        m, n = handle[3:-1].split("|")
        return gl_superalgebra(int(m), int(n))
    if handle.startswith("q("):
        return q_superalgebra(int(handle[2:-1]))
    if handle.startswith("p("):
        return p_superalgebra(int(handle[2:-1]))
    raise ParameterError("unknown Lie-algebra handle %r" % handle)


# ---------------------------------------------------------------------------
# Subalgebra closure over Q with integral saturation.


def _reduce(vec: List[Fraction], rows: List[Tuple[int, List[Fraction]]]) -> List[Fraction]:
    for piv, row in rows:
        if vec[piv]:
            c = vec[piv] / row[piv]
            vec = [a - c * b for a, b in zip(vec, row)]
    return vec


def subalgebra_closure(
    L: LieSuperAlgebra,
    generators: Iterable[Union[int, BasisElement, Mapping[int, int]]],
) -> List[Tuple[int, ...]]:
    """Saturated integral basis of the smallest bracket-closed subspace
    containing the generators (HNF rows in basis coordinates)."""
    rows: List[Tuple[int, List[Fraction]]] = []

    def insert(vec: List[Fraction]) -> bool:
        vec = _reduce(list(vec), rows)
        piv = next((i for i, v in enumerate(vec) if v), None)
        if piv is None:
            return False
        rows.append((piv, vec))
        return True

    def to_vec(elem: Mapping[int, object]) -> List[Fraction]:
        out = [Fraction(0)] * L.dim
        for k, v in elem.items():
            out[k] = Fraction(v)
        return out

    frontier: List[List[Fraction]] = []
    for g in generators:
        vec = to_vec(L.as_element(g))
        if insert(vec):
            frontier.append(vec)
    members: List[List[Fraction]] = list(frontier)
    while frontier:
        new_frontier: List[List[Fraction]] = []
        for u in frontier:
            for v in members:
                for a, b in ((u, v), (v, u)):
                    prod: Dict[int, Fraction] = {}
                    for i, ci in enumerate(a):
                        if not ci:
                            continue
                        for j, cj in enumerate(b):
                            if not cj:
                                continue
                            entry = L.bracket_table.get((i, j))
                            if not entry:
                                continue
                            c = ci * cj
                            for k, w in entry.items():
                                prod[k] = prod.get(k, Fraction(0)) + c * w
                    vec = to_vec(prod)
                    if insert(vec):
                        new_frontier.append(vec)
        members.extend(new_frontier)
        frontier = new_frontier
    if not rows:
        return []
    int_rows = []
    for _piv, row in rows:
        den = 1
        for v in row:
            den = den * v.denominator // _gcd(den, v.denominator)
        int_rows.append([int(v * den) for v in row])
    return lattice.saturate(int_rows, L.dim)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


# ---------------------------------------------------------------------------
# Admissible bases.


@dataclass(frozen=True)
class AdmissibleBaseReport:
    ok: bool
    conditions: Tuple[Tuple[str, bool], ...]
    failures: Tuple[str, ...]
    mode: str

    def condition(self, name: str) -> bool:
        for key, value in self.conditions:
            if key == name:
                return value
        raise KeyError(name)


def _cone_member(
    target: Weight,
    psis: Sequence[Weight],
    order: OrderFunctional,
    memo: Dict[Weight, bool],
) -> bool:
    """Whether target is a nonnegative integer combination of the psis.

    All psis have positive order value, so the order value is a strictly
    decreasing budget and the search terminates.
    """
    if target in memo:
        return memo[target]
    if lattice.is_zero(target):
        return True
    memo[target] = False
    budget = order.eval(target)
    for psi in psis:
        if order.eval(psi) <= budget:
            if _cone_member(lattice.sub(target, psi), psis, order, memo):
                memo[target] = True
                break
    return memo[target]


def check_admissible_base(
    L: LieSuperAlgebra,
    datum: SuperRootDatum,
    order: OrderFunctional,
    psi_even: Sequence[Weight],
    psi_odd: Sequence[Weight],
    mode: str = "assisted",
) -> AdmissibleBaseReport:
    """Evaluate the three base conditions: generation, separation,
    multiplicity-one.

    Generation demands (a) that every nonzero root is a sign-definite
    integer combination of the base, and (b) that every positive odd
    weight space lies in the bracket closure of the odd base vectors --
    together with the even simple root vectors in ``assisted`` mode
    (default), or of the odd base vectors alone in ``strict`` mode.
    """
    if mode not in ("assisted", "strict"):
        raise ParameterError("mode must be 'assisted' or 'strict'")
    psi_even = sorted(tuple(w) for w in psi_even)
    psi_odd_set = sorted(set(tuple(w) for w in psi_odd))
    expected_even = simple_even_roots(datum, order)
    if psi_even != expected_even:
        raise ParameterError(
            "psi_even %r is not the simple system %r of the positive even roots"
            % (psi_even, expected_even)
        )
    pos = positive_system(datum, order)
    odd_pos = [w for w, _ in pos.odd_pos]
    for gamma in psi_odd_set:
        if gamma not in odd_pos:
            raise ParameterError("psi_odd root %r is not a positive odd root" % (gamma,))

    failures: List[str] = []

    # generation (a): the base spans every root with a uniform sign.
    base = list(dict.fromkeys(psi_even + psi_odd_set))
    memo: Dict[Weight, bool] = {}
    cone_ok = True
    for root in sorted(set(datum.all_roots())):
        if order.eval(root) > 0:
            member = _cone_member(root, base, order, memo)
        else:
            member = _cone_member(lattice.neg(root), base, order, memo)
        if not member:
            cone_ok = False
            failures.append(
                "generation: root %r is not a signed combination of the base" % (root,)
            )

    # generation (b): bracket closure reaches every positive odd weight space.
    gens: List[Mapping[int, int]] = []
    for gamma in psi_odd_set:
        for b in L.weight_space(gamma, ODD):
            gens.append({b.index: 1})
    if mode == "assisted":
        for alpha in psi_even:
            gens.append({L.even_root_vector(alpha).index: 1})
    closure = subalgebra_closure(L, gens)
    closure_ok = True
    for gamma in odd_pos:
        for b in L.weight_space(gamma, ODD):
            vec = [0] * L.dim
            vec[b.index] = 1
            if not lattice.in_lattice(vec, closure):
                closure_ok = False
                failures.append(
                    "generation: odd weight space %r escapes the %s closure"
                    % (gamma, mode)
                )
    generation_ok = cone_ok and closure_ok

    # separation: gamma - alpha is never a root.
    all_roots = set(datum.all_roots())
    separation_ok = True
    for alpha in psi_even:
        for gamma in psi_odd_set:
            if alpha == gamma:
                continue
            if lattice.sub(gamma, alpha) in all_roots:
                separation_ok = False
                failures.append(
                    "separation: %r - %r is a root" % (gamma, alpha)
                )

    # multiplicity-one on shared simple roots.
    odd_mult = {r: m for r, m in datum.odd_roots}
    shared = [a for a in psi_even if a in psi_odd_set]
    mult_ok = True
    for alpha in shared:
        for signed in (alpha, lattice.neg(alpha)):
            if odd_mult.get(signed, 0) != 1:
                mult_ok = False
                failures.append(
                    "multiplicity-one: dim of odd space %r is %d"
                    % (signed, odd_mult.get(signed, 0))
                )

    conditions = (
        ("generation", generation_ok),
        ("separation", separation_ok),
        ("multiplicity-one", mult_ok),
    )
    return AdmissibleBaseReport(
        ok=generation_ok and separation_ok and mult_ok,
        conditions=conditions,
        failures=tuple(failures),
        mode=mode,
    )


def K_alpha(L: LieSuperAlgebra, alpha: Weight) -> Element:
    """Bracket of the even raising vector of weight alpha with the odd
    vector of weight -alpha; requires a one-dimensional odd space."""
    x = L.even_root_vector(alpha)
    neg_space = L.weight_space(lattice.neg(alpha), ODD)
    if len(neg_space) != 1:
        raise ParameterError(
            "odd weight space for %r has dimension %d, need 1"
            % (lattice.neg(alpha), len(neg_space))
        )
    return L.bracket(x, neg_space[0])


def eval_weight_on_cartan(
    L: LieSuperAlgebra, lam: Weight, h: Union[int, BasisElement, Mapping[int, int]]
) -> int:
    """Value of a weight on a diagonal even element, read off the first
    ``rank`` diagonal entries of its matrix."""
    lattice.check_rank(lam, L.rank)
    elem = L.as_element(h)
    parity = L.parity_of(elem)
    if parity not in (None, EVEN):
        raise ParameterError("element is not even")
    mat = L.element_matrix(elem)
    for i in range(L.size):
        for j in range(L.size):
            if i != j and mat[i][j]:
                raise ParameterError("element is not diagonal")
    return sum(lam[i] * mat[i][i] for i in range(L.rank))
