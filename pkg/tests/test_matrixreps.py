import random
from fractions import Fraction
from itertools import combinations, permutations
from math import comb, factorial

import pytest

from symfunc.characters import (
    char_inner,
    character,
    character_row,
    class_function,
    frobenius_ch,
    irreducible_character,
    kronecker,
)
from symfunc.errors import DegreeCapError
from symfunc.matrixreps import (
    MatrixRep,
    SubgroupSpec,
    adjacent_transposition,
    character_of,
    classical_rep,
    decompose,
    direct_sum,
    exterior_square_character,
    gl_character,
    gl_dimension,
    induce,
    lex_transversal,
    restrict,
    schur_weyl_check,
    sign_of,
    specht_module,
    specht_polynomial,
    square_class,
    subgroup_char_inner,
    tensor_product,
    trivial_of,
    verify_generator_relations,
    young_basis,
    young_module,
)
from symfunc.partitions import (
    all_permutations,
    compose,
    cycle_type,
    inverse_perm,
    partitions_of,
    sign as perm_sign,
)
from symfunc.ring import basis_element, evaluate, multiply
from symfunc.tableaux import count_ssyt, f_lambda, standard_tableaux

DEFINING_S3 = {
    (1, 2, 3): ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
    (2, 1, 3): ((0, 1, 0), (1, 0, 0), (0, 0, 1)),
    (3, 2, 1): ((0, 0, 1), (0, 1, 0), (1, 0, 0)),
    (1, 3, 2): ((1, 0, 0), (0, 0, 1), (0, 1, 0)),
    (2, 3, 1): ((0, 0, 1), (1, 0, 0), (0, 1, 0)),
    (3, 1, 2): ((0, 1, 0), (0, 0, 1), (1, 0, 0)),
}

STANDARD_S3 = {
    (1, 2, 3): ((1, 0), (0, 1)),
    (2, 1, 3): ((-1, -1), (0, 1)),
    (3, 2, 1): ((1, 0), (-1, -1)),
    (1, 3, 2): ((0, 1), (1, 0)),
    (2, 3, 1): ((-1, -1), (1, 0)),
    (3, 1, 2): ((0, 1), (-1, -1)),
}


def test_defining_s3_matches_worked_matrices():
    rep = classical_rep("defining", 3)
    for word, matrix in DEFINING_S3.items():
        assert rep.matrix(word) == matrix


def test_standard_s3_matches_worked_blocks():
    rep = classical_rep("standard", 3)
    for word, matrix in STANDARD_S3.items():
        assert rep.matrix(word) == matrix


def test_trivial_and_sign():
    for n in range(1, 6):
        triv = classical_rep("trivial", n)
        sgn = classical_rep("sign", n)
        for w in list(all_permutations(n))[:10]:
            assert triv.matrix(w) == ((1,),)
            assert sgn.matrix(w) == ((perm_sign(w),),)


def test_defining_trace_counts_fixed_points():
    rng = random.Random(307)
    for n in range(2, 6):
        rep = classical_rep("defining", n)
        for _ in range(5):
            w = tuple(rng.sample(range(1, n + 1), n))
            assert rep.trace(w) == sum(1 for i in range(1, n + 1) if w[i - 1] == i)


def test_character_of_defining_s3():
    chi = character_of(classical_rep("defining", 3))
    assert [chi.value(mu) for mu in [(1, 1, 1), (2, 1), (3,)]] == [3, 1, 0]


def test_regular_character_and_decomposition():
    for n in range(1, 6):
        reg = classical_rep("regular", n)
        chi = character_of(reg)
        assert chi.value((1,) * n) == factorial(n)
        for mu in partitions_of(n):
            if mu != (1,) * n:
                assert chi.value(mu) == 0
        if n <= 5:
            assert decompose(reg) == {lam: f_lambda(lam) for lam in partitions_of(n)}


def test_regular_cap():
    with pytest.raises(DegreeCapError):
        classical_rep("regular", 7)


def test_char_inner_fixtures():
    triv = character_of(classical_rep("trivial", 3))
    std = character_of(classical_rep("standard", 3))
    dfn = character_of(classical_rep("defining", 3))
    assert char_inner(triv, std) == 0
    assert char_inner(triv, triv) == 1
    assert char_inner(std, std) == 1  # irreducible
    assert char_inner(dfn, dfn) == 2  # trivial + standard


def test_decompose_defining():
    for n in range(2, 6):
        assert decompose(classical_rep("defining", n)) == {(n,): 1, (n - 1, 1): 1}


def test_young_module_examples():
    ym = young_module((2, 1))
    assert ym.dim == 3
    assert set(young_basis((2, 1))) == {((1, 2), (3,)), ((1, 3), (2,)), ((2, 3), (1,))}
    assert character_of(ym).values == character_of(classical_rep("defining", 3)).values


def test_young_module_classical_specialisations():
    for n in range(2, 6):
        assert (
            character_of(young_module((n,))).values
            == character_of(classical_rep("trivial", n)).values
        )
        assert (
            character_of(young_module((n - 1, 1))).values
            == character_of(classical_rep("defining", n)).values
        )
        if n <= 5:
            assert (
                character_of(young_module((1,) * n)).values
                == character_of(classical_rep("regular", n)).values
            )


def test_young_module_dimension_formula():
    for n in range(1, 7):
        for lam in partitions_of(n):
            dim = factorial(n)
            for part in lam:
                dim //= factorial(part)
            ym = young_module(lam)
            assert ym.dim == dim
            assert ym.trace((1,) * 0 + tuple(range(1, n + 1))) == dim


def test_young_rule_decomposition_to_5():
    from symfunc.tableaux import kostka

    for n in range(1, 6):
        for mu in partitions_of(n):
            mults = decompose(young_module(mu))
            assert mults == {
                lam: kostka(lam, mu)
                for lam in partitions_of(n)
                if kostka(lam, mu)
            }
            assert mults[mu] == 1
            from symfunc.partitions import dominates

            for lam in mults:
                assert dominates(lam, mu)


def test_specht_polynomial_fixture_22():
    t = standard_tableaux((2, 2))[0]
    assert t.rows == ((1, 2), (3, 4))
    # (x3 - x1)(x4 - x2) expanded
    assert specht_polynomial(t) == {
        (0, 0, 1, 1): 1,
        (1, 0, 0, 1): -1,
        (0, 1, 1, 0): -1,
        (1, 1, 0, 0): 1,
    }


def test_specht_s3_polynomials():
    # S^(3) = span(1), S^(2,1) = span(x3-x1, x2-x1), S^(1,1,1) = span(Vandermonde)
    assert specht_polynomial(standard_tableaux((3,))[0]) == {(0, 0, 0): 1}
    polys = [specht_polynomial(t) for t in standard_tableaux((2, 1))]
    assert {(0, 0, 1): 1, (1, 0, 0): -1} in polys  # x3 - x1
    assert {(0, 1, 0): 1, (1, 0, 0): -1} in polys  # x2 - x1
    vdm = specht_polynomial(standard_tableaux((1, 1, 1))[0])
    # Vandermonde on three variables: 6 signed monomials
    assert vdm == {
        (0, 1, 2): 1, (0, 2, 1): -1, (1, 0, 2): -1,
        (2, 0, 1): 1, (1, 2, 0): 1, (2, 1, 0): -1,
    }


def test_specht_one_column_is_sign():
    for n in range(2, 6):
        rep = specht_module((1,) * n)
        assert rep.dim == 1
        for w in list(all_permutations(n))[: min(24, factorial(n))]:
            assert rep.matrix(w) == ((perm_sign(w),),)


def test_specht_dimensions_and_characters_to_5():
    for n in range(1, 6):
        for lam in partitions_of(n):
            rep = specht_module(lam)
            assert rep.dim == f_lambda(lam)
            got = character_of(rep)
            assert got.values == tuple(
                character(lam, mu) for mu in partitions_of(n)
            )


def test_specht_irreducibility_criterion_to_5():
    for n in range(1, 6):
        for lam in partitions_of(n):
            chi = character_of(specht_module(lam))
            assert char_inner(chi, chi) == 1
        # a reducible one for contrast
        dfn = character_of(classical_rep("defining", n))
        assert (char_inner(dfn, dfn) == 1) == (n == 1)


def test_specht_cap():
    with pytest.raises(DegreeCapError):
        specht_module((3, 2, 1))


def test_generator_relations_hold_exactly():
    reps = [classical_rep("defining", n) for n in range(2, 7)]
    reps += [classical_rep("standard", n) for n in range(2, 7)]
    reps += [classical_rep("regular", n) for n in range(2, 5)]
    reps += [specht_module(lam) for n in range(2, 6) for lam in partitions_of(n)]
    reps += [young_module(lam) for lam in [(2, 1), (2, 2), (3, 1), (2, 1, 1)]]
    for rep in reps:
        assert verify_generator_relations(rep), rep.label


def test_matrix_map_is_a_homomorphism():
    rng = random.Random(311)
    from symfunc.linalg import mat_mul

    reps = [
        classical_rep("standard", 4),
        specht_module((3, 2)),
        young_module((2, 2, 1)),
        classical_rep("regular", 4),
    ]
    for rep in reps:
        n = rep.n
        for _ in range(6):
            p = tuple(rng.sample(range(1, n + 1), n))
            q = tuple(rng.sample(range(1, n + 1), n))
            assert rep.matrix(compose(p, q)) == mat_mul(rep.matrix(p), rep.matrix(q))


def test_large_permutation_modules_act_homomorphically():
    # regular S_5 is 120x120: check the underlying action instead of
    # multiplying dense matrices
    rng = random.Random(313)
    reg = classical_rep("regular", 5)
    basis = list(all_permutations(5))
    for _ in range(20):
        p = tuple(rng.sample(range(1, 6), 5))
        q = tuple(rng.sample(range(1, 6), 5))
        for h in rng.sample(basis, 8):
            assert compose(compose(p, q), h) == compose(p, compose(q, h))


# --- induction ------------------------------------------------------------


def test_induce_golden_block_matrix():
    sub = SubgroupSpec.from_elements(3, [(1, 2, 3), (1, 3, 2)])  # {e, (2 3)}
    ind = induce(trivial_of(sub), 3, transversal=[(1, 2, 3), (2, 1, 3), (3, 2, 1)])
    assert ind.matrix((2, 1, 3)) == ((0, 1, 0), (1, 0, 0), (0, 0, 1))
    chi = character_of(ind)
    assert [chi.value(mu) for mu in [(1, 1, 1), (2, 1), (3,)]] == [3, 1, 0]
    assert decompose(ind) == {(3,): 1, (2, 1): 1}


def test_induce_character_is_transversal_independent():
    sub = SubgroupSpec.from_elements(3, [(1, 2, 3), (1, 3, 2)])
    base = trivial_of(sub)
    t1 = lex_transversal(sub)
    t2 = [(1, 2, 3), (2, 1, 3), (3, 2, 1)]
    c1 = character_of(induce(base, 3, transversal=t1))
    c2 = character_of(induce(base, 3, transversal=t2))
    assert c1.values == c2.values
    # matrices themselves may differ
    assert t1 != t2


def test_induce_rejects_non_transversal():
    sub = SubgroupSpec.from_elements(3, [(1, 2, 3), (1, 3, 2)])
    with pytest.raises(ValueError):
        induce(trivial_of(sub), 3, transversal=[(1, 2, 3), (1, 3, 2), (2, 1, 3)])


def test_induce_young_trivial_matches_young_module():
    for lam in [(2, 1), (3, 1), (2, 2), (2, 1, 1)]:
        sub = SubgroupSpec.young(lam)
        ind = induce(trivial_of(sub), sum(lam))
        assert character_of(ind).values == character_of(young_module(lam)).values


def test_induce_from_whole_group_is_identity():
    full = SubgroupSpec.from_elements(3, list(all_permutations(3)))
    std = classical_rep("standard", 3)
    ind = induce(restrict(std, full), 3)
    assert ind.dim == std.dim
    assert character_of(ind).values == character_of(std).values
    for w in all_permutations(3):
        assert ind.matrix(w) == std.matrix(w)


def test_restrict_basics():
    sub = SubgroupSpec.young((2, 2))
    std = classical_rep("standard", 4)
    res = restrict(std, sub)
    for h in sub.elements:
        assert res.matrix(h) == std.matrix(h)
    with pytest.raises(ValueError):
        res.matrix((2, 3, 4, 1))  # outside the domain
    triv = restrict(classical_rep("trivial", 4), sub)
    assert all(triv.matrix(h) == ((1,),) for h in sub.elements)


def test_frobenius_reciprocity_young_subgroups_of_s4():
    for comp in partitions_of(4):
        sub = SubgroupSpec.young(comp)
        for base_maker in (trivial_of, sign_of):
            y = base_maker(sub)
            ind_chi = character_of(induce(y, 4))
            for lam in partitions_of(4):
                chi = irreducible_character(lam)
                lhs = char_inner(ind_chi, chi)
                rhs = subgroup_char_inner(
                    sub,
                    lambda h: y.matrix(h)[0][0],
                    lambda h: character(lam, cycle_type(h)),
                )
                assert lhs == rhs


def outer_tensor_on_young(mu, nu):
    """The genuine outer tensor S^mu x S^nu as a matrix representation of
    the Young subgroup S_a x S_b."""
    a, b = sum(mu), sum(nu)
    sub = SubgroupSpec.young((a, b))
    left_rep = specht_module(mu)
    right_rep = specht_module(nu)
    from symfunc.linalg import kron as _kron

    def fn(h):
        left = tuple(h[i] for i in range(a))
        right = tuple(h[i] - a for i in range(a, a + b))
        return _kron(left_rep.matrix(left), right_rep.matrix(right))

    return MatrixRep(a + b, left_rep.dim * right_rep.dim, fn, domain=sub)


def test_induction_multiplicativity_matches_ring_product():
    # inducing the outer tensor of irreducibles up to S_(a+b) realizes the
    # Schur-basis product: ch(induced) = ch(left) * ch(right)
    from symfunc.ring import convert

    for a, b in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1), (2, 3), (4, 1)]:
        n = a + b
        for mu in partitions_of(a):
            for nu in partitions_of(b):
                ind = induce(outer_tensor_on_young(mu, nu), n)
                product = multiply(
                    basis_element("s", mu), basis_element("s", nu)
                )
                assert frobenius_ch(character_of(ind)) == product
                coeffs = convert(product, "s").terms
                assert decompose(ind) == {lam: int(c) for lam, c in coeffs.items()}


def test_direct_sum_and_tensor_fixtures():
    triv = classical_rep("trivial", 3)
    std = classical_rep("standard", 3)
    dsum = direct_sum(triv, std)
    assert character_of(dsum).values == character_of(
        classical_rep("defining", 3)
    ).values
    s21 = specht_module((2, 1))
    tp = tensor_product(s21, s21)
    assert character_of(tp).values == tuple(
        character((2, 1), mu) ** 2 for mu in partitions_of(3)
    )
    assert decompose(tp) == {(3,): 1, (2, 1): 1, (1, 1, 1): 1}
    # tensoring with the trivial representation changes nothing
    tpt = tensor_product(std, triv)
    assert character_of(tpt).values == character_of(std).values


def test_tensor_decomposition_matches_kronecker_to_4():
    for n in range(2, 5):
        for mu in partitions_of(n):
            for nu in partitions_of(n):
                tp = tensor_product(specht_module(mu), specht_module(nu))
                mults = decompose(tp)
                for lam in partitions_of(n):
                    assert mults.get(lam, 0) == kronecker(lam, mu, nu)


def test_square_class():
    assert square_class((2,)) == (1, 1)
    assert square_class((3,)) == (3,)
    assert square_class((4, 2, 1)) == (2, 2, 1, 1, 1)


def test_exterior_square_against_explicit_wedge_basis():
    # brute-force oracle: act on e_i ^ e_j for the defining representation
    for n in range(2, 6):
        rep = classical_rep("defining", n)
        chi = exterior_square_character(character_of(rep))
        pairs = list(combinations(range(1, n + 1), 2))

        def wedge_trace(w):
            tr = 0
            for (i, j) in pairs:
                a, b = w[i - 1], w[j - 1]
                if (a, b) == (i, j):
                    tr += 1
                elif (b, a) == (i, j):
                    tr -= 1
            return tr

        from symfunc.partitions import class_representative

        for mu in partitions_of(n):
            assert chi.value(mu) == wedge_trace(class_representative(mu))


def test_exterior_square_of_a_line_is_zero():
    chi = character_of(classical_rep("trivial", 4))
    sq = exterior_square_character(chi)
    assert all(v == 0 for v in sq.values)


def test_exterior_square_is_a_character():
    chi = character_of(classical_rep("defining", 5))
    sq = exterior_square_character(chi)
    norm = char_inner(sq, sq)
    assert norm.denominator == 1 and norm >= 0


def test_gl_character_and_dimension():
    poly = gl_character((2,), 2)
    assert poly.terms == {(2, 0): 1, (0, 2): 1, (1, 1): 1}
    assert gl_dimension((2,), 2) == 3
    for m in range(1, 6):
        for k in range(1, 6):
            assert gl_dimension((1,) * k, m) == comb(m, k)
    assert gl_dimension((1, 1, 1), 2) == 0
    assert gl_character((1, 1, 1), 2).is_zero()
    # dimension equals the character at all-ones
    for lam in partitions_of(4):
        for m in range(1, 5):
            assert gl_character(lam, m).at_ones() == gl_dimension(lam, m)


def test_schur_weyl_fixtures():
    assert schur_weyl_check(3, 1)
    assert 2**2 == f_lambda((2,)) * gl_dimension((2,), 2) + f_lambda(
        (1, 1)
    ) * gl_dimension((1, 1), 2)
    assert sum(
        f_lambda(lam) * gl_dimension(lam, 3)
        for lam in partitions_of(4)
        if len(lam) <= 3
    ) == 81
    for n in range(7):
        for m in range(7):
            assert schur_weyl_check(n, m)


def test_specht_frobenius_cross_route_to_5():
    # the strongest oracle: explicit polynomial modules vs Jacobi-Trudi
    for n in range(1, 6):
        for lam in partitions_of(n):
            rep = specht_module(lam)
            assert frobenius_ch(character_of(rep)) == basis_element("s", lam)


def test_subgroup_spec_validation():
    with pytest.raises(ValueError):
        SubgroupSpec.from_elements(3, [(1, 2, 3), (2, 1, 3), (2, 3, 1)])
    with pytest.raises(ValueError):
        SubgroupSpec.from_elements(3, [(2, 1, 3)])
    sub = SubgroupSpec.young((2, 1))
    assert sub.order == 2
    assert (2, 1, 3) in sub


def test_young_subgroup_order():
    for comp in [(2, 2), (3, 1), (1, 1, 1, 1), (4,)]:
        assert SubgroupSpec.young(comp).order == int(
            __import__("math").prod(factorial(c) for c in comp)
        )
