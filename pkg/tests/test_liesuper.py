import pytest

from superroot import lattice
from superroot.liesuper import (
    EVEN,
    ODD,
    DecompositionError,
    K_alpha,
    check_admissible_base,
    eval_weight_on_cartan,
    gl_superalgebra,
    lie_algebra_for,
    p_superalgebra,
    q_superalgebra,
    subalgebra_closure,
)
from superroot.rootdata import (
    OrderFunctional,
    ParameterError,
    build_gl,
    build_p,
    build_q,
    default_order,
    simple_even_roots,
)


def names(L, elem):
    return {L.basis[i].name: c for i, c in elem.items()}


# -- bracket ----------------------------------------------------------------


def test_gl11_odd_anticommutator():
    L = gl_superalgebra(1, 1)
    e12 = L.weight_space((1, -1), ODD)[0]
    e21 = L.weight_space((-1, 1), ODD)[0]
    assert names(L, L.bracket(e12, e21)) == {"H_1": 1, "H_2": 1}


def test_self_bracket_parity_cases():
    L = q_superalgebra(2)
    for b in L.basis:
        sq = L.bracket(b, b)
        if b.parity == EVEN:
            assert sq == {}
        else:
            # equals twice the matrix square
            twice = lattice_mat_scale(L, b)
            assert L.element_matrix(sq) == twice


def lattice_mat_scale(L, b):
    from superroot.liesuper import mat_mul

    sq = mat_mul(b.matrix, b.matrix)
    return tuple(tuple(2 * v for v in row) for row in sq)


def test_q2_odd_cartan_square():
    L = q_superalgebra(2)
    k1 = L.weight_space((0, 0), ODD)[0]
    assert names(L, L.bracket(k1, k1)) == {"H_1": 2}


def test_bracket_rejects_foreign_matrix():
    L = q_superalgebra(2)
    bad = tuple(
        tuple(1 if (i, j) == (0, 1) else 0 for j in range(4)) for i in range(4)
    )
    with pytest.raises(DecompositionError):
        L.decompose(bad)


# -- weight spaces ----------------------------------------------------------


def test_weight_space_gl21():
    L = gl_superalgebra(2, 1)
    space = L.weight_space((1, 0, -1), ODD)
    assert len(space) == 1 and space[0].name == "Y[1,3]"


def test_weight_space_q_odd_cartan():
    for n in (1, 2, 3):
        L = q_superalgebra(n)
        assert len(L.odd_cartan()) == n == build_q(n).h_odd_dim


def test_weight_space_missing_weight():
    L = gl_superalgebra(1, 1)
    assert L.weight_space((2, -2), ODD) == []


@pytest.mark.parametrize(
    "datum,L",
    [
        (build_gl(2, 1), gl_superalgebra(2, 1)),
        (build_gl(2, 2), gl_superalgebra(2, 2)),
        (build_q(2), q_superalgebra(2)),
        (build_q(3), q_superalgebra(3)),
        (build_p(2), p_superalgebra(2)),
        (build_p(3), p_superalgebra(3)),
    ],
    ids=lambda v: getattr(v, "label", None) or getattr(v, "family", ""),
)
def test_weight_space_dims_match_datum(datum, L):
    for root, mult in datum.odd_roots:
        assert len(L.weight_space(root, ODD)) == mult
    for root, _ in datum.even_roots:
        assert len(L.weight_space(root, EVEN)) == 1
    assert L.basis_counts() == (datum.n_even, datum.n_odd)


def test_lie_algebra_for_handles():
    assert lie_algebra_for(build_gl(2, 1)).family == "gl(2|1)"
    assert lie_algebra_for(build_q(2)).family == "q(2)"
    assert lie_algebra_for(build_p(2)).family == "p(2)"


# -- structure properties ---------------------------------------------------


def _parity_sign(px, py):
    return -1 if (px == ODD and py == ODD) else 1


@pytest.mark.parametrize("L", [gl_superalgebra(1, 1), q_superalgebra(2), p_superalgebra(2)], ids=lambda L: L.family)
def test_super_skew_symmetry(L):
    for x in L.basis:
        for y in L.basis:
            lhs = L.bracket(x, y)
            rhs = L.bracket(y, x)
            sign = _parity_sign(x.parity, y.parity)
            combined = dict(lhs)
            for k, v in rhs.items():
                combined[k] = combined.get(k, 0) + sign * v
            assert not any(combined.values())


def test_weight_grading_q3():
    L = q_superalgebra(3)
    for t in L.even_cartan():
        for x in L.basis:
            got = L.bracket(t, x)
            expect = eval_weight_on_cartan(L, x.weight, t)
            target = {x.index: expect} if expect else {}
            assert got == target


# -- closure ----------------------------------------------------------------


def test_closure_empty():
    L = q_superalgebra(2)
    assert subalgebra_closure(L, []) == []


def test_closure_single_odd_vector_stays_small():
    L = gl_superalgebra(2, 1)
    y23 = L.weight_space((0, 1, -1), ODD)[0]
    closure = subalgebra_closure(L, [y23])
    assert len(closure) == 1


def test_closure_assisted_reaches_second_odd_space():
    L = gl_superalgebra(2, 1)
    y23 = L.weight_space((0, 1, -1), ODD)[0]
    x12 = L.even_root_vector((1, -1, 0))
    closure = subalgebra_closure(L, [y23, x12])
    y13 = L.weight_space((1, 0, -1), ODD)[0]
    vec = [0] * L.dim
    vec[y13.index] = 1
    assert lattice.in_lattice(vec, closure)


def test_closure_q2_derived_part():
    L = q_superalgebra(2)
    gens = [
        L.even_root_vector((1, -1)),
        L.even_root_vector((-1, 1)),
        L.weight_space((1, -1), ODD)[0],
        L.weight_space((-1, 1), ODD)[0],
    ]
    closure = subalgebra_closure(L, gens)
    assert len(closure) == 7  # gl(2) plus traceless odd part


def test_closure_idempotent_and_monotone():
    L = q_superalgebra(2)
    gens = [L.even_root_vector((1, -1)), L.weight_space((1, -1), ODD)[0]]
    once = subalgebra_closure(L, gens)
    again = subalgebra_closure(L, [dict(enumerate(row)) for row in once])
    assert once == again
    bigger = subalgebra_closure(L, gens + [L.weight_space((-1, 1), ODD)[0]])
    for row in once:
        assert lattice.in_lattice(row, bigger)


# -- admissible bases ---------------------------------------------------------


def _base_check(datum, L, order, psi_odd, mode="assisted"):
    psi_even = simple_even_roots(datum, order)
    return check_admissible_base(L, datum, order, psi_even, psi_odd, mode=mode)


def test_admissible_gl():
    for m, n in ((1, 1), (2, 1), (2, 2), (3, 2)):
        d = build_gl(m, n)
        psi_odd = [tuple((1 if k == m - 1 else 0) - (1 if k == m else 0) for k in range(m + n))]
        rep = _base_check(d, lie_algebra_for(d), default_order(d), psi_odd)
        assert rep.ok, (m, n, rep.failures)


def test_admissible_p_good_order():
    for n in (2, 3):
        d = build_p(n)
        psi_odd = [tuple(2 if k == n - 1 else 0 for k in range(n))]
        rep = _base_check(d, lie_algebra_for(d), default_order(d), psi_odd)
        assert rep.ok, rep.failures


def test_admissible_p2_bad_order():
    d = build_p(2)
    order = OrderFunctional.from_values([-1, -2])
    rep = _base_check(d, lie_algebra_for(d), order, [(-1, -1)])
    assert not rep.ok
    assert rep.condition("generation") is False
    assert rep.condition("separation") is True
    assert rep.condition("multiplicity-one") is True


def test_admissible_q():
    for n in (2, 3):
        d = build_q(n)
        order = default_order(d)
        psi = simple_even_roots(d, order)
        rep = _base_check(d, lie_algebra_for(d), order, psi)
        assert rep.ok, rep.failures


def test_admissible_strict_mode_gl21():
    d = build_gl(2, 1)
    rep = _base_check(
        d, lie_algebra_for(d), default_order(d), [(0, 1, -1)], mode="strict"
    )
    assert not rep.ok and rep.condition("generation") is False


def test_admissible_rejects_bad_psi_odd():
    d = build_q(2)
    with pytest.raises(ParameterError):
        _base_check(d, lie_algebra_for(d), default_order(d), [(-1, 1)])


def test_admissible_rejects_bad_psi_even():
    d = build_q(2)
    L = lie_algebra_for(d)
    with pytest.raises(ParameterError):
        check_admissible_base(L, d, default_order(d), [(2, -2)], [(1, -1)])


# -- K_alpha and weight evaluation -------------------------------------------


def test_K_alpha_q2():
    L = q_superalgebra(2)
    assert names(L, K_alpha(L, (1, -1))) == {"K_1": 1, "K_2": -1}


def test_K_alpha_square_value():
    L = q_superalgebra(3)
    for i, lam in ((0, (1, -2, 4)), (1, (0, 3, -1))):
        alpha = tuple(
            (1 if k == i else 0) - (1 if k == i + 1 else 0) for k in range(3)
        )
        k = K_alpha(L, alpha)
        value = eval_weight_on_cartan(L, lam, L.bracket(k, k))
        assert value == 2 * (lam[i] + lam[i + 1])


def test_K_alpha_needs_multiplicity_one():
    L = gl_superalgebra(2, 1)
    with pytest.raises(ParameterError):
        K_alpha(L, (1, -1, 0))  # no odd space of weight -(1,-1,0)


def test_eval_weight_examples():
    Lq = q_superalgebra(2)
    h = {Lq.even_root_vector((1, -1)).index: 0}  # zero element
    assert eval_weight_on_cartan(Lq, (1, -2), h) == 0
    halpha = Lq.bracket(Lq.even_root_vector((1, -1)), Lq.even_root_vector((-1, 1)))
    assert eval_weight_on_cartan(Lq, (1, -2), halpha) == 3
    k = K_alpha(Lq, (1, -1))
    assert eval_weight_on_cartan(Lq, (1, -2), Lq.bracket(k, k)) == -2


def test_eval_weight_rejects_non_cartan():
    L = q_superalgebra(2)
    with pytest.raises(ParameterError):
        eval_weight_on_cartan(L, (1, 0), L.even_root_vector((1, -1)))
    with pytest.raises(ParameterError):
        eval_weight_on_cartan(L, (1, 0), L.odd_cartan()[0])
