"""Super root data: builders for the standard families, positivity splits,
unimodularity verdicts and the dimension calculus of Frobenius kernels.

A datum records the even root system with its coroots, the odd roots
with their multiplicities (the dimension of the corresponding odd
weight space), and the dimension of the odd part of the Cartan.  The
weight zero never appears among the odd roots; it is carried by
``h_odd_dim`` alone.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import lattice
from .lattice import Coweight, Weight


class DatumValidationError(ValueError):
    """A super root datum violated a structural invariant."""


class InvalidOrderError(ValueError):
    """An order functional vanishes on a root of the datum."""


class ParameterError(ValueError):
    """A numeric parameter is outside its allowed domain."""


def is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def check_odd_prime(p: int) -> None:
    if not is_odd_prime(p):
        raise ParameterError("p must be an odd prime, got %r" % (p,))


def check_positive(r: int, name: str = "r") -> None:
    if r < 1:
        raise ParameterError("%s must be >= 1, got %r" % (name, r))


@dataclass(frozen=True)
class SuperRootDatum:
    rank: int
    even_roots: Tuple[Tuple[Weight, Coweight], ...]
    odd_roots: Tuple[Tuple[Weight, int], ...]
    h_odd_dim: int
    label: str
    lie_handle: Optional[str] = None

    def __post_init__(self) -> None:
        if self.rank < 0:
            raise DatumValidationError("rank: must be nonnegative")
        if self.h_odd_dim < 0:
            raise DatumValidationError("h_odd_dim: must be nonnegative")
        seen = set()
        for k, (root, coroot) in enumerate(self.even_roots):
            where = "even_roots[%d]" % k
            if len(root) != self.rank or len(coroot) != self.rank:
                raise DatumValidationError("%s: wrong length" % where)
            if lattice.is_zero(root):
                raise DatumValidationError("%s.root: even root must be nonzero" % where)
            if lattice.pair(root, coroot) != 2:
                raise DatumValidationError(
                    "%s: pairing of root with coroot is %d, expected 2"
                    % (where, lattice.pair(root, coroot))
                )
            if root in seen:
                raise DatumValidationError("%s.root: duplicate even root %r" % (where, root))
            seen.add(root)
        for root in seen:
            if lattice.neg(root) not in seen:
                raise DatumValidationError(
                    "even_roots: not closed under negation (missing %r)"
                    % (lattice.neg(root),)
                )
        seen_odd = set()
        for k, (root, mult) in enumerate(self.odd_roots):
            where = "odd_roots[%d]" % k
            if len(root) != self.rank:
                raise DatumValidationError("%s.root: wrong length" % where)
            if lattice.is_zero(root):
                raise DatumValidationError(
                    "%s.root: weight zero belongs to h_odd_dim, not odd_roots" % where
                )
            if mult < 1:
                raise DatumValidationError("%s.mult: must be >= 1" % where)
            if root in seen_odd:
                raise DatumValidationError("%s.root: odd root %r listed twice" % (where, root))
            seen_odd.add(root)

    @property
    def even_root_weights(self) -> List[Weight]:
        return [r for r, _ in self.even_roots]

    @property
    def n_even(self) -> int:
        """dim of the even part of the Lie superalgebra: roots plus Cartan."""
        return len(self.even_roots) + self.rank

    @property
    def n_odd(self) -> int:
        """dim of the odd part: weighted odd roots plus the odd Cartan."""
        return sum(m for _, m in self.odd_roots) + self.h_odd_dim

    def coroot_of(self, root: Weight) -> Coweight:
        for r, c in self.even_roots:
            if r == root:
                return c
        raise ParameterError("%r is not an even root of %s" % (root, self.label))

    def all_roots(self) -> List[Weight]:
        """Every nonzero root, even and odd (odd multiplicities ignored)."""
        out = list(self.even_root_weights)
        out.extend(r for r, _ in self.odd_roots)
        return out


@dataclass(frozen=True)
class OrderFunctional:
    """Linear functional on X(T) (x) Q used to split the roots by sign."""

    values: Tuple[Fraction, ...]

    @staticmethod
    def from_values(values: Sequence) -> "OrderFunctional":
        return OrderFunctional(tuple(Fraction(v) for v in values))

    def eval(self, w: Weight) -> Fraction:
        if len(w) != len(self.values):
            raise lattice.DimensionMismatch(
                "functional of rank %d applied to %r" % (len(self.values), w)
            )
        return sum((v * c for v, c in zip(self.values, w)), Fraction(0))

    def validate(self, datum: SuperRootDatum) -> None:
        for root in datum.all_roots():
            if self.eval(root) == 0:
                raise InvalidOrderError("order functional vanishes on root %r" % (root,))


def default_order(datum: SuperRootDatum) -> OrderFunctional:
    """The standard order for built-in families: GL/Q use -i, P uses n-i+1."""
    n = datum.rank
    if datum.label.startswith("p("):
        return OrderFunctional.from_values([n - i for i in range(n)])
    return OrderFunctional.from_values([-(i + 1) for i in range(n)])


@dataclass(frozen=True)
class PositiveSystem:
    even_pos: Tuple[Tuple[Weight, int], ...]
    even_neg: Tuple[Tuple[Weight, int], ...]
    odd_pos: Tuple[Tuple[Weight, int], ...]
    odd_neg: Tuple[Tuple[Weight, int], ...]

    @property
    def n_odd_pos(self) -> int:
        return sum(m for _, m in self.odd_pos)

    @property
    def n_odd_neg(self) -> int:
        return sum(m for _, m in self.odd_neg)


def positive_system(datum: SuperRootDatum, order: OrderFunctional) -> PositiveSystem:
    """Split all nonzero roots by the sign of the order functional."""
    order.validate(datum)
    even_pos, even_neg, odd_pos, odd_neg = [], [], [], []
    for root, _ in datum.even_roots:
        (even_pos if order.eval(root) > 0 else even_neg).append((root, 1))
    for root, mult in datum.odd_roots:
        (odd_pos if order.eval(root) > 0 else odd_neg).append((root, mult))
    key = lambda pair: pair[0]
    return PositiveSystem(
        tuple(sorted(even_pos, key=key)),
        tuple(sorted(even_neg, key=key)),
        tuple(sorted(odd_pos, key=key)),
        tuple(sorted(odd_neg, key=key)),
    )


def simple_even_roots(datum: SuperRootDatum, order: OrderFunctional) -> List[Weight]:
    """Positive even roots that are not sums of two positive even roots."""
    pos = [r for r, _ in positive_system(datum, order).even_pos]
    pos_set = set(pos)
    simple = []
    for r in pos:
        if not any(lattice.sub(r, s) in pos_set for s in pos if s != r):
            simple.append(r)
    return sorted(simple)


# ---------------------------------------------------------------------------
# Builders for the named families.


def _gl_coroot(rank: int, i: int, j: int) -> Coweight:
    c = [0] * rank
    c[i] = 1
    c[j] = -1
    return tuple(c)


def _unit(rank: int, i: int, value: int = 1) -> Weight:
    w = [0] * rank
    w[i] = value
    return tuple(w)


def build_gl(m: int, n: int) -> SuperRootDatum:
    """General linear family gl(m|n): cross-block differences are odd."""
    if m < 1 or n < 1:
        raise ParameterError("build_gl requires m, n >= 1")
    rank = m + n
    even: List[Tuple[Weight, Coweight]] = []
    odd: List[Tuple[Weight, int]] = []
    for i in range(rank):
        for j in range(rank):
            if i == j:
                continue
            root = tuple(
                1 if k == i else (-1 if k == j else 0) for k in range(rank)
            )
            same_block = (i < m) == (j < m)
            if same_block:
                even.append((root, _gl_coroot(rank, i, j)))
            else:
                odd.append((root, 1))
    return SuperRootDatum(
        rank=rank,
        even_roots=tuple(even),
        odd_roots=tuple(odd),
        h_odd_dim=0,
        label="gl(%d|%d)" % (m, n),
        lie_handle="gl(%d|%d)" % (m, n),
    )


def build_q(n: int) -> SuperRootDatum:
    """Queer family q(n): even and odd roots coincide, odd Cartan of dim n."""
    if n < 1:
        raise ParameterError("build_q requires n >= 1")
    even: List[Tuple[Weight, Coweight]] = []
    odd: List[Tuple[Weight, int]] = []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            root = tuple(1 if k == i else (-1 if k == j else 0) for k in range(n))
            even.append((root, _gl_coroot(n, i, j)))
            odd.append((root, 1))
    return SuperRootDatum(
        rank=n,
        even_roots=tuple(even),
        odd_roots=tuple(odd),
        h_odd_dim=n,
        label="q(%d)" % n,
        lie_handle="q(%d)" % n,
    )


def build_p(n: int) -> SuperRootDatum:
    """Periplectic family p(n): odd roots +-(li+lj) for i<j and 2*lt."""
    if n < 2:
        raise ParameterError("build_p requires n >= 2")
    even: List[Tuple[Weight, Coweight]] = []
    odd: List[Tuple[Weight, int]] = []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            root = tuple(1 if k == i else (-1 if k == j else 0) for k in range(n))
            even.append((root, _gl_coroot(n, i, j)))
    for i in range(n):
        for j in range(i + 1, n):
            plus = tuple(1 if k in (i, j) else 0 for k in range(n))
            odd.append((plus, 1))
            odd.append((lattice.neg(plus), 1))
    for t in range(n):
        odd.append((_unit(n, t, 2), 1))
    return SuperRootDatum(
        rank=n,
        even_roots=tuple(even),
        odd_roots=tuple(odd),
        h_odd_dim=0,
        label="p(%d)" % n,
        lie_handle="p(%d)" % n,
    )


def build_gl_even(n: int) -> SuperRootDatum:
    """Purely even GL_n datum, the reductive backbone for semidirect twists."""
    if n < 1:
        raise ParameterError("build_gl_even requires n >= 1")
    even: List[Tuple[Weight, Coweight]] = []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            root = tuple(1 if k == i else (-1 if k == j else 0) for k in range(n))
            even.append((root, _gl_coroot(n, i, j)))
    return SuperRootDatum(
        rank=n,
        even_roots=tuple(even),
        odd_roots=(),
        h_odd_dim=0,
        label="gl_%d" % n,
        lie_handle=None,
    )


def build_semidirect(even_datum: SuperRootDatum, chars: Sequence[Weight]) -> SuperRootDatum:
    """Even group acting on an odd abelian tail twisted by characters.

    Each character chi contributes the odd root -chi; repeated characters
    pile up as multiplicity, zero characters enlarge the odd Cartan.
    """
    if even_datum.odd_roots or even_datum.h_odd_dim:
        raise ParameterError("build_semidirect needs a purely even base datum")
    counts: Dict[Weight, int] = {}
    zero_count = 0
    for chi in chars:
        lattice.check_rank(chi, even_datum.rank)
        if lattice.is_zero(chi):
            zero_count += 1
        else:
            key = lattice.neg(tuple(chi))
            counts[key] = counts.get(key, 0) + 1
    odd = tuple(sorted(counts.items()))
    return SuperRootDatum(
        rank=even_datum.rank,
        even_roots=even_datum.even_roots,
        odd_roots=odd,
        h_odd_dim=zero_count,
        label="%s:semidirect[%d]" % (even_datum.label, len(chars)),
        lie_handle=None,
    )


# ---------------------------------------------------------------------------
# Unimodularity and dimension calculus.


@dataclass(frozen=True)
class UnimodularityReport:
    odd_root_sum: Weight
    per_coordinate_divisibility: Tuple[Tuple[int, int, bool], ...]
    verdict: bool
    modulus: Optional[int] = None  # p^r for the Frobenius check, None in char 0


def odd_root_sum(datum: SuperRootDatum) -> Weight:
    """Sum over odd roots of multiplicity times the root."""
    total = lattice.zero(datum.rank)
    for root, mult in datum.odd_roots:
        total = lattice.add(total, lattice.scale(mult, root))
    return total


def chi_r_on_torus(datum: SuperRootDatum) -> Weight:
    """Exponent weight of the distinguished character restricted to the torus.

    The even contribution cancels because the even roots sum to zero, so
    the value is the weighted odd-root sum, independent of r.
    """
    return odd_root_sum(datum)


def is_unimodular_char0(datum: SuperRootDatum) -> UnimodularityReport:
    total = odd_root_sum(datum)
    per = tuple((i, v, v == 0) for i, v in enumerate(total))
    return UnimodularityReport(total, per, lattice.is_zero(total), None)


def is_frobenius_unimodular(datum: SuperRootDatum, p: int, r: int) -> UnimodularityReport:
    """Divisibility of every coordinate of the odd-root sum by p^r."""
    check_odd_prime(p)
    check_positive(r)
    total = odd_root_sum(datum)
    q = p**r
    per = tuple((i, v, v % q == 0) for i, v in enumerate(total))
    return UnimodularityReport(total, per, all(ok for _, _, ok in per), q)


def all_frobenius_unimodular(datum: SuperRootDatum) -> bool:
    """Whether every Frobenius kernel is unimodular: the odd-root sum is zero."""
    return lattice.is_zero(odd_root_sum(datum))


def delta_r(
    datum: SuperRootDatum, order: OrderFunctional, p: int, r: int
) -> Weight:
    """Torus restriction of the character measuring ind/coind asymmetry."""
    check_odd_prime(p)
    check_positive(r)
    pos = positive_system(datum, order)
    total = lattice.zero(datum.rank)
    for root, _ in pos.even_pos:
        total = lattice.add(total, lattice.scale(-(p**r - 1), root))
    for root, mult in pos.odd_neg:
        total = lattice.add(total, lattice.scale(mult, root))
    return total


def dim_O_Gr(datum: SuperRootDatum, p: int, r: int) -> int:
    """Dimension of the coordinate superalgebra of the r-th Frobenius kernel."""
    check_odd_prime(p)
    check_positive(r)
    return p ** (r * datum.n_even) * 2**datum.n_odd


def pbw_monomial_count(datum: SuperRootDatum, p: int, r: int) -> int:
    """Number of ordered divided-power monomials with exponents below p^r.

    Counted factor by factor: p^r choices for each even root vector and
    each Cartan generator, 2 for every odd basis vector.  Must agree
    with :func:`dim_O_Gr` by duality.
    """
    check_odd_prime(p)
    check_positive(r)
    count = 1
    for _root, _cov in datum.even_roots:
        count *= p**r
    for _i in range(datum.rank):
        count *= p**r
    for _root, mult in datum.odd_roots:
        count *= 2**mult
    count *= 2**datum.h_odd_dim
    return count


def induced_dims(
    datum: SuperRootDatum,
    order: OrderFunctional,
    p: int,
    r: int,
    dim_u_lambda: int,
) -> Tuple[int, int]:
    """Dimensions of the induced and coinduced modules from a seed of
    dimension ``dim_u_lambda``."""
    check_odd_prime(p)
    check_positive(r)
    if dim_u_lambda < 0:
        raise ParameterError("dim_u_lambda must be nonnegative")
    pos = positive_system(datum, order)
    dim_ind = p ** (r * len(pos.even_pos)) * 2**pos.n_odd_pos * dim_u_lambda
    dim_coind = p ** (r * len(pos.even_neg)) * 2**pos.n_odd_neg * dim_u_lambda
    return dim_ind, dim_coind


# ---------------------------------------------------------------------------
# JSON interchange.


def datum_to_json(datum: SuperRootDatum) -> dict:
    out = {
        "rank": datum.rank,
        "label": datum.label,
        "even_roots": [
            {"root": list(r), "coroot": list(c)} for r, c in datum.even_roots
        ],
        "odd_roots": [{"root": list(r), "mult": m} for r, m in datum.odd_roots],
        "h_odd_dim": datum.h_odd_dim,
    }
    if datum.lie_handle is not None:
        out["lie_handle"] = datum.lie_handle
    return out


def _as_int_list(value, where: str) -> Tuple[int, ...]:
    if not isinstance(value, list) or not all(isinstance(v, int) for v in value):
        raise DatumValidationError("%s: expected a list of integers" % where)
    return tuple(value)


def datum_from_json(data: dict) -> SuperRootDatum:
    if not isinstance(data, dict):
        raise DatumValidationError("$: expected an object")
    for key in ("rank", "label", "even_roots", "odd_roots", "h_odd_dim"):
        if key not in data:
            raise DatumValidationError("$.%s: missing" % key)
    if not isinstance(data["rank"], int):
        raise DatumValidationError("$.rank: expected an integer")
    if not isinstance(data["label"], str):
        raise DatumValidationError("$.label: expected a string")
    if not isinstance(data["h_odd_dim"], int):
        raise DatumValidationError("$.h_odd_dim: expected an integer")
    even = []
    for k, entry in enumerate(data["even_roots"]):
        where = "$.even_roots[%d]" % k
        if not isinstance(entry, dict) or "root" not in entry or "coroot" not in entry:
            raise DatumValidationError("%s: expected {root, coroot}" % where)
        even.append(
            (
                _as_int_list(entry["root"], where + ".root"),
                _as_int_list(entry["coroot"], where + ".coroot"),
            )
        )
    odd = []
    for k, entry in enumerate(data["odd_roots"]):
        where = "$.odd_roots[%d]" % k
        if not isinstance(entry, dict) or "root" not in entry or "mult" not in entry:
            raise DatumValidationError("%s: expected {root, mult}" % where)
        if not isinstance(entry["mult"], int):
            raise DatumValidationError("%s.mult: expected an integer" % where)
        odd.append((_as_int_list(entry["root"], where + ".root"), entry["mult"]))
    try:
        return SuperRootDatum(
            rank=data["rank"],
            even_roots=tuple(even),
            odd_roots=tuple(odd),
            h_odd_dim=data["h_odd_dim"],
            label=data["label"],
            lie_handle=data.get("lie_handle"),
        )
    except DatumValidationError as exc:
        raise DatumValidationError("$.%s" % exc.args[0]) from exc


def load_datum(path: str) -> SuperRootDatum:
    with open(path, "r", encoding="utf-8") as fh:
        return datum_from_json(json.load(fh))
