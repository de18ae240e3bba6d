"""Dominant and flat weight predicates, p^r-restriction, base-p digit
decomposition of weights, and the character ring with Frobenius twist.

The digit search is deterministic: candidates for each digit run over
the canonical residue lift {0..p-1} shifted by p times a bounded box,
ordered canonical-first (by L1 size of the shift, then lexicographically),
and the first complete decomposition in that depth-first order is
returned.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from . import lattice
from .lattice import Weight
from .liesuper import K_alpha, LieSuperAlgebra, check_admissible_base
from .rootdata import (
    OrderFunctional,
    ParameterError,
    SuperRootDatum,
    check_odd_prime,
    check_positive,
    positive_system,
)


class UnsupportedFamilyError(NotImplementedError):
    """The requested predicate has no formula for this family."""


class FlatnessError(ValueError):
    """A weight failed the flat (or dominant) precondition."""


class DecompositionFailure(ValueError):
    """No digit decomposition was found within the search bounds."""

    def __init__(self, message: str, frontier: Sequence[Weight]):
        super().__init__(message)
        self.frontier = list(frontier)


# ---------------------------------------------------------------------------
# Weight predicates.


def is_dominant(datum: SuperRootDatum, order: OrderFunctional, lam: Weight) -> bool:
    """Nonnegative pairing against every positive even coroot."""
    lattice.check_rank(lam, datum.rank)
    pos = positive_system(datum, order)
    pos_set = {w for w, _ in pos.even_pos}
    for root, coroot in datum.even_roots:
        if root in pos_set and lattice.pair(lam, coroot) < 0:
            return False
    return True


def _family_params(family) -> Tuple[str, Tuple[int, ...]]:
    label = family.label if isinstance(family, SuperRootDatum) else str(family)
    if label.startswith("gl(") and "|" in label:
        m, n = label[3:-1].split("|")
        return "gl", (int(m), int(n))
    if label.startswith("q("):
        return "q", (int(label[2:-1]),)
    raise UnsupportedFamilyError(
        "no flat-weight characterization for family %r" % label
    )


def supports_flat(family) -> bool:
    try:
        _family_params(family)
        return True
    except UnsupportedFamilyError:
        return False


def is_flat(family, p: int, lam: Weight) -> bool:
    """Membership in the set of weights with nonvanishing induced module.

    For q(n) this is the exact arithmetic condition (weakly decreasing,
    with equal neighbours divisible by p); for gl(m|n) it is blockwise
    dominance.  Other families raise.
    """
    kind, params = _family_params(family)
    if p != 0 and (p < 3 or p % 2 == 0):
        raise ParameterError("p must be 0 or an odd prime, got %r" % (p,))
    if kind == "q":
        (n,) = params
        lattice.check_rank(lam, n)
        for i in range(n - 1):
            if lam[i] < lam[i + 1]:
                return False
            if lam[i] == lam[i + 1]:
                if p == 0:
                    if lam[i] != 0:
                        return False
                elif lam[i] % p != 0:
                    return False
        return True
    m, n = params
    lattice.check_rank(lam, m + n)
    blocks = (lam[:m], lam[m:])
    return all(
        all(block[i] >= block[i + 1] for i in range(len(block) - 1)) for block in blocks
    )


# ---------------------------------------------------------------------------
# Restriction.


@dataclass(frozen=True)
class PerRootCheck:
    root: Weight
    kind: str  # "even-only" or "shared"
    pairing: int
    kform_value: Optional[int]
    bound: int
    ok: bool


@dataclass(frozen=True)
class RestrictionReport:
    weight: Weight
    p: int
    r: int
    per_root: Tuple[PerRootCheck, ...]
    verdict: bool
    weakened: bool


def _kform_vector(L: LieSuperAlgebra, alpha: Weight) -> Weight:
    """Diagonal of [K_alpha, K_alpha]; pairing a weight with it gives the
    value of the weight on that Cartan element."""
    k = K_alpha(L, alpha)
    kk = L.bracket(k, k)
    mat = L.element_matrix(kk)
    for i in range(L.size):
        for j in range(L.size):
            if i != j and mat[i][j]:
                raise ParameterError("[K_alpha, K_alpha] is not diagonal")
    return tuple(mat[i][i] for i in range(L.rank))


def _check_flat_pre(datum: SuperRootDatum, order: OrderFunctional, lam: Weight, p: int):
    """Flat check when the family has one, dominance otherwise.

    Returns (ok, weakened)."""
    if supports_flat(datum):
        return is_flat(datum, p, lam), False
    return is_dominant(datum, order, lam), True


def is_restricted(
    datum: SuperRootDatum,
    L: LieSuperAlgebra,
    order: OrderFunctional,
    psi_even: Sequence[Weight],
    psi_odd: Sequence[Weight],
    lam: Weight,
    p: int,
    r: int,
    validate_base: bool = True,
) -> RestrictionReport:
    """Per-simple-root bound check for p^r-restriction.

    Roots in the even base only are bounded by p^r - 1; roots shared
    with the odd base are bounded by p^r when p does not divide the
    weight's value on [K_alpha, K_alpha], and by p^r - 1 otherwise.
    """
    check_odd_prime(p)
    check_positive(r)
    lattice.check_rank(lam, datum.rank)
    if validate_base:
        report = check_admissible_base(L, datum, order, psi_even, psi_odd)
        if not report.ok:
            raise ParameterError(
                "(psi_even, psi_odd) is not an admissible base: %s"
                % "; ".join(report.failures)
            )
    flat_ok, weakened = _check_flat_pre(datum, order, lam, p)
    if not flat_ok:
        raise FlatnessError(
            "weight %r fails the %s precondition"
            % (lam, "dominance" if weakened else "flatness")
        )
    psi_odd_set = {tuple(w) for w in psi_odd}
    checks: List[PerRootCheck] = []
    q = p**r
    for alpha in sorted(tuple(w) for w in psi_even):
        pairing = lattice.pair(lam, datum.coroot_of(alpha))
        if alpha in psi_odd_set:
            kvec = _kform_vector(L, alpha)
            kval = lattice.pair(lam, kvec)
            bound = q - 1 if kval % p == 0 else q
            checks.append(
                PerRootCheck(alpha, "shared", pairing, kval, bound, pairing <= bound)
            )
        else:
            checks.append(
                PerRootCheck(alpha, "even-only", pairing, None, q - 1, pairing <= q - 1)
            )
    return RestrictionReport(
        weight=tuple(lam),
        p=p,
        r=r,
        per_root=tuple(checks),
        verdict=all(c.ok for c in checks),
        weakened=weakened,
    )


# ---------------------------------------------------------------------------
# Digit decomposition.


def _search_radius(radius: Optional[int]) -> int:
    if radius is not None:
        return radius
    env = os.environ.get("SUPERROOT_SEARCH_RADIUS")
    return int(env) if env else 2


def _shift_boxes(rank: int, radius: int) -> List[Tuple[int, ...]]:
    shifts = [()]
    for _ in range(rank):
        shifts = [s + (k,) for s in shifts for k in range(-radius, radius + 1)]
    shifts.sort(key=lambda s: (sum(abs(k) for k in s), s))
    return shifts


def steinberg_decompose(
    datum: SuperRootDatum,
    L: LieSuperAlgebra,
    order: OrderFunctional,
    psi_even: Sequence[Weight],
    psi_odd: Sequence[Weight],
    lam: Weight,
    p: int,
    radius: Optional[int] = None,
    max_digits: Optional[int] = None,
    validate_base: bool = True,
) -> List[Weight]:
    """Write ``lam`` as digit_0 + p*digit_1 + ... with every digit
    restricted at r=1 (and flat where the family supports the check).

    Digits are congruent to the running weight mod p coordinatewise; the
    first complete decomposition in the canonical-first search order is
    returned and trailing zero digits are dropped.  Raises
    :class:`DecompositionFailure` when the bounded search is exhausted.
    """
    check_odd_prime(p)
    lattice.check_rank(lam, datum.rank)
    if validate_base:
        base_report = check_admissible_base(L, datum, order, psi_even, psi_odd)
        if not base_report.ok:
            raise ParameterError(
                "(psi_even, psi_odd) is not an admissible base: %s"
                % "; ".join(base_report.failures)
            )
    flat_ok, weakened = _check_flat_pre(datum, order, lam, p)
    if not flat_ok:
        raise FlatnessError("weight %r fails the flatness precondition" % (lam,))

    def passes_flat(w: Weight) -> bool:
        ok, _ = _check_flat_pre(datum, order, w, p)
        return ok

    psi_even_sorted = sorted(tuple(w) for w in psi_even)
    psi_odd_set = {tuple(w) for w in psi_odd}
    even_only = [
        (a, datum.coroot_of(a)) for a in psi_even_sorted if a not in psi_odd_set
    ]
    shared = [
        (a, datum.coroot_of(a), _kform_vector(L, a))
        for a in psi_even_sorted
        if a in psi_odd_set
    ]

    def restricted_r1(w: Weight) -> bool:
        for _a, coroot in even_only:
            if lattice.pair(w, coroot) > p - 1:
                return False
        for _a, coroot, kvec in shared:
            bound = p - 1 if lattice.pair(w, kvec) % p == 0 else p
            if lattice.pair(w, coroot) > bound:
                return False
        return True

    radius = _search_radius(radius)
    shifts = _shift_boxes(datum.rank, radius)
    if max_digits is None:
        top = max((abs(c) for c in lam), default=0)
        max_digits = 3
        q = 1
        while q <= top:
            q *= p
            max_digits += 1
    frontier: List[Weight] = []
    dead: Dict[Tuple[Weight, int], bool] = {}

    def dfs(mu: Weight, budget: int) -> Optional[List[Weight]]:
        if lattice.is_zero(mu):
            return []
        if budget == 0:
            if len(frontier) < 32:
                frontier.append(mu)
            return None
        if dead.get((mu, budget)):
            return None
        residues = tuple(c % p for c in mu)
        height = max(abs(c) for c in mu)
        for shift in shifts:
            digit = tuple(res + p * k for res, k in zip(residues, shift))
            nxt = tuple((c - d) // p for c, d in zip(mu, digit))
            # The remainder must strictly approach zero, otherwise the
            # canonical digit of a negative coordinate cycles forever.
            if any(nxt) and max(abs(c) for c in nxt) >= height:
                continue
            if not passes_flat(digit):
                continue
            if not restricted_r1(digit):
                continue
            if not passes_flat(nxt):
                continue
            tail = dfs(nxt, budget - 1)
            if tail is not None:
                return [digit] + tail
        dead[(mu, budget)] = True
        return None

    digits = dfs(tuple(lam), max_digits)
    if digits is None:
        raise DecompositionFailure(
            "no decomposition of %r within radius %d and %d digits"
            % (lam, radius, max_digits),
            frontier,
        )
    while digits and lattice.is_zero(digits[-1]):
        digits.pop()
    return digits


# ---------------------------------------------------------------------------
# Character ring.


@dataclass(frozen=True)
class CharacterElement:
    """Finitely supported integer function on the weight lattice."""

    rank: int
    terms: Tuple[Tuple[Weight, int], ...]

    @staticmethod
    def from_dict(rank: int, terms: Dict[Weight, int]) -> "CharacterElement":
        clean = {tuple(w): m for w, m in terms.items() if m}
        for w in clean:
            lattice.check_rank(w, rank)
        return CharacterElement(rank, tuple(sorted(clean.items())))

    @staticmethod
    def monomial(weight: Weight, mult: int = 1) -> "CharacterElement":
        return CharacterElement.from_dict(len(weight), {tuple(weight): mult})

    def as_dict(self) -> Dict[Weight, int]:
        return dict(self.terms)

    def total_dim(self) -> int:
        return sum(m for _, m in self.terms)


def _check_same_rank(a: CharacterElement, b: CharacterElement) -> None:
    if a.rank != b.rank:
        raise lattice.DimensionMismatch(
            "characters of rank %d and %d" % (a.rank, b.rank)
        )


def char_add(a: CharacterElement, b: CharacterElement) -> CharacterElement:
    _check_same_rank(a, b)
    out = a.as_dict()
    for w, m in b.terms:
        out[w] = out.get(w, 0) + m
    return CharacterElement.from_dict(a.rank, out)


def char_mul(a: CharacterElement, b: CharacterElement) -> CharacterElement:
    """Convolution product: e^a * e^b = e^(a+b)."""
    _check_same_rank(a, b)
    out: Dict[Weight, int] = {}
    for wa, ma in a.terms:
        for wb, mb in b.terms:
            key = lattice.add(wa, wb)
            out[key] = out.get(key, 0) + ma * mb
    return CharacterElement.from_dict(a.rank, out)


def frobenius_twist(a: CharacterElement, p: int, r: int) -> CharacterElement:
    """e^w -> e^(p^r w), multiplicities preserved."""
    check_odd_prime(p)
    if r < 0:
        raise ParameterError("twist exponent must be >= 0")
    q = p**r
    return CharacterElement.from_dict(
        a.rank, {lattice.scale(q, w): m for w, m in a.terms}
    )


def steinberg_character(
    restricted_chars: Sequence[CharacterElement], p: int
) -> CharacterElement:
    """Product of the i-th character twisted by p^i."""
    check_odd_prime(p)
    if not restricted_chars:
        raise ParameterError("need at least one factor")
    out = frobenius_twist(restricted_chars[0], p, 0)
    for i, ch in enumerate(restricted_chars[1:], start=1):
        out = char_mul(out, frobenius_twist(ch, p, i))
    return out


def upsilon_leading(
    ch: CharacterElement, order: OrderFunctional
) -> Tuple[Weight, int]:
    """The unique term of maximal order value; raises on ties or zero."""
    if not ch.terms:
        raise ParameterError("zero character has no leading term")
    best = max(ch.terms, key=lambda t: order.eval(t[0]))
    ties = [t for t in ch.terms if order.eval(t[0]) == order.eval(best[0])]
    if len(ties) != 1:
        raise ParameterError("leading term is not unique")
    return best


def char_to_json(ch: CharacterElement) -> dict:
    return {"terms": [{"weight": list(w), "mult": m} for w, m in ch.terms]}


def char_from_json(data: dict, rank: Optional[int] = None) -> CharacterElement:
    if not isinstance(data, dict) or "terms" not in data:
        raise ParameterError("character JSON must be an object with 'terms'")
    terms: Dict[Weight, int] = {}
    for k, entry in enumerate(data["terms"]):
        if (
            not isinstance(entry, dict)
            or "weight" not in entry
            or "mult" not in entry
            or not isinstance(entry["mult"], int)
            or not isinstance(entry["weight"], list)
        ):
            raise ParameterError("terms[%d]: expected {weight: [int], mult: int}" % k)
        w = tuple(entry["weight"])
        terms[w] = terms.get(w, 0) + entry["mult"]
    if rank is None:
        if not terms:
            raise ParameterError("cannot infer rank of an empty character")
        rank = len(next(iter(terms)))
    return CharacterElement.from_dict(rank, terms)
