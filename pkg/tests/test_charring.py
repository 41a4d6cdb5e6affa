"""Character engine: Freudenthal multiplicities, ring operations, plethysms,
and Levi-to-group section computations."""

from math import comb, factorial

import pytest

from folcheck.charring import (
    FormalCharacter,
    adams_operation,
    char_add,
    char_product,
    freudenthal_character,
    grassmannian_sections_cauchy,
    levi_bundle_sections,
    levi_fiber_character,
    schur_plethysm,
    sym_power,
    trivial_character,
    wedge_power,
)
from folcheck.rootdata import (
    build_root_system,
    cotangent_weight,
    weyl_dim,
)


class TestFreudenthal:
    def test_sl2_triple(self):
        rs = build_root_system("A1")
        chi = freudenthal_character(rs, (2,))
        assert chi.as_dict() == {(2,): 1, (0,): 1, (-2,): 1}

    def test_a2_adjoint_against_tensor_oracle(self):
        # decompose C^3 x (C^3)* minus trivial, by explicit tensor construction
        rs = build_root_system("A2")
        vec = freudenthal_character(rs, (1, 0))
        dual = freudenthal_character(rs, (0, 1))
        oracle = char_add([(1, char_product(vec, dual)),
                           (-1, trivial_character(rs))])
        assert freudenthal_character(rs, (1, 1)) == oracle

    @pytest.mark.parametrize("n", [5, 7, 9])
    def test_minuscule_wedge3(self, n):
        rs = build_root_system(f"A{n - 1}")
        lam = tuple(1 if i == 2 else 0 for i in range(n - 1))
        chi = freudenthal_character(rs, lam)
        assert chi.mass() == comb(n, 3)
        assert all(m == 1 for _, m in chi.items())

    @pytest.mark.parametrize("name,lam,dim", [
        ("E6", (1, 0, 0, 0, 0, 0), 27),
        ("E6", (0, 0, 1, 0, 0, 0), 351),
        ("D5", (0, 0, 0, 0, 1), 16),
        ("C3", (0, 0, 1), 14),
        ("E7", (0, 0, 0, 0, 0, 0, 1), 56),
        ("E7", (0, 0, 0, 0, 0, 1, 0), 1539),
    ])
    def test_mass_equals_weyl_dim(self, name, lam, dim):
        rs = build_root_system(name)
        chi = freudenthal_character(rs, lam)
        assert chi.mass() == dim == weyl_dim(rs, lam)

    def test_weyl_invariance_spotcheck(self):
        rs = build_root_system("C3")
        chi = freudenthal_character(rs, (1, 1, 0))
        cart = rs.cartan
        for w, m in chi.items():
            for i in range(rs.rank):
                refl = tuple(w[t] - w[i] * cart[t][i] for t in range(rs.rank))
                assert chi.get(refl) == m

    def test_non_dominant_rejected(self):
        with pytest.raises(ValueError):
            freudenthal_character(build_root_system("A2"), (1, -1))


class TestRingOps:
    def test_product_with_trivial(self):
        rs = build_root_system("A2")
        chi = freudenthal_character(rs, (1, 1))
        assert char_product(chi, trivial_character(rs)) == chi

    def test_clebsch_gordan_masses(self):
        rs = build_root_system("A1")
        two = freudenthal_character(rs, (1,))
        sq = char_product(two, two)
        assert sq.as_dict() == {(2,): 1, (0,): 2, (-2,): 1}

    def test_mass_multiplicative(self):
        rs = build_root_system("C3")
        a = freudenthal_character(rs, (1, 0, 0))
        b = freudenthal_character(rs, (0, 1, 0))
        assert char_product(a, b).mass() == a.mass() * b.mass()

    def test_adams_identity_and_mass(self):
        rs = build_root_system("A3")
        chi = freudenthal_character(rs, (1, 0, 1))
        assert adams_operation(chi, 1) == chi
        for m in (2, 3, 5):
            assert adams_operation(chi, m).mass() == chi.mass()

    def test_adams_functorial(self):
        rs = build_root_system("B3")
        chi = freudenthal_character(rs, (1, 0, 0))
        lhs = adams_operation(adams_operation(chi, 2), 2)
        assert lhs == adams_operation(chi, 4)

    def test_packed_product_matches_dict(self, monkeypatch):
        import folcheck.charring as ch
        rs = build_root_system("A5")
        chi = freudenthal_character(rs, (0, 1, 0, 1, 0))
        plain = char_product(chi, chi)
        monkeypatch.setattr(ch, "_PACK_PAIR_THRESHOLD", 10)
        packed = char_product(chi, chi)
        assert packed.is_packed()
        assert packed.as_dict() == plain.as_dict()
        assert packed.mass() == plain.mass()

    def test_exact_divide_guards(self):
        rs = build_root_system("A1")
        chi = freudenthal_character(rs, (1,))
        with pytest.raises(ArithmeticError):
            chi.exact_divide(2)


class TestPlethysm:
    def test_wedge_sym_recombine_to_square(self):
        for name, lam in [("A3", (0, 1, 0)), ("C3", (1, 0, 0)),
                          ("D4", (0, 0, 0, 1))]:
            rs = build_root_system(name)
            chi = freudenthal_character(rs, lam)
            square = char_product(chi, chi)
            total = char_add([(1, wedge_power(chi, 2)), (1, sym_power(chi, 2))])
            assert total == square

    def test_degree4_cauchy_identity(self):
        # sum over |mu|=4 of dim(S4 irrep mu) * Schur functor = 4th tensor power
        rs = build_root_system("A2")
        chi = freudenthal_character(rs, (1, 0))
        dims = {(4,): 1, (3, 1): 3, (2, 2): 2, (2, 1, 1): 3, (1, 1, 1, 1): 1}
        parts = [(d, schur_plethysm(chi, mu)) for mu, d in dims.items()]
        lhs = char_add(parts)
        rhs = chi
        for _ in range(3):
            rhs = char_product(rhs, chi)
        assert lhs == rhs

    def test_wedge_against_plethysm_route(self):
        rs = build_root_system("A5")
        chi = freudenthal_character(rs, (0, 1, 0, 0, 0))
        assert wedge_power(chi, 2) == schur_plethysm(chi, (1, 1))
        assert wedge_power(chi, 4) == schur_plethysm(chi, (1, 1, 1, 1))

    def test_sym2_of_trivial(self):
        rs = build_root_system("A2")
        assert sym_power(trivial_character(rs), 2) == trivial_character(rs)

    def test_wedge_with_multiplicities(self):
        # adjoint of A2 has a double zero weight; binomial leaf handling
        rs = build_root_system("A2")
        adj = freudenthal_character(rs, (1, 1))
        w2 = wedge_power(adj, 2)
        assert w2.mass() == comb(8, 2)

    def test_degree_bounds(self):
        rs = build_root_system("A1")
        chi = freudenthal_character(rs, (1,))
        with pytest.raises(ValueError):
            schur_plethysm(chi, (5,))
        # beyond the top exterior power the result is the zero character
        assert wedge_power(chi, 3).support_size() == 0


class TestLeviSections:
    def test_grassmannian_one_forms(self):
        a7 = build_root_system("A7")
        cot = cotangent_weight(a7, 3)
        for d in range(3):
            dec = levi_bundle_sections(a7, 3, cot, 1, d + 2)
            expected = [0, 1, d, 1, 0, 0, 0]
            assert dec.terms == {tuple(expected): 1}

    def test_grassmannian_three_forms_match_cauchy(self):
        for n, k in [(7, 2), (8, 3), (9, 4)]:
            rs = build_root_system(f"A{n - 1}")
            cot = cotangent_weight(rs, k)
            for d in (0, 1):
                slow = levi_bundle_sections(rs, k, cot, 3, 2 * d + 4)
                fast = grassmannian_sections_cauchy(n, k, 3, 2 * d + 4)
                assert slow.terms == fast.terms

    def test_spinor_three_forms(self):
        for n in (5, 6):
            rs = build_root_system(f"D{n}")
            dec = levi_bundle_sections(rs, n, cotangent_weight(rs, n), 3, 4)
            first = [0] * n
            first[n - 4] = 2
            second = [0] * n
            if n > 4:
                second[n - 5] = 1
            second[n - 2] = 2
            assert dec.terms == {tuple(first): 1, tuple(second): 1}

    def test_lagrangian_forms(self):
        c5 = build_root_system("C5")
        cot = cotangent_weight(c5, 5)
        assert levi_bundle_sections(c5, 5, cot, 1, 2).terms == \
            {(0, 0, 0, 2, 0): 1}
        assert levi_bundle_sections(c5, 5, cot, 3, 4).terms == \
            {(0, 0, 3, 0, 1): 1, (0, 1, 0, 3, 0): 1}

    def test_cayley_forms(self):
        e6 = build_root_system("E6")
        cot = cotangent_weight(e6, 1)
        assert levi_bundle_sections(e6, 1, cot, 1, 2).terms == \
            {(0, 0, 1, 0, 0, 0): 1}
        assert levi_bundle_sections(e6, 1, cot, 3, 4).terms == \
            {(0, 1, 0, 0, 1, 0): 1}

    def test_non_cominuscule_refused(self):
        c4 = build_root_system("C4")
        with pytest.raises(ValueError):
            levi_bundle_sections(c4, 2, (0, 1, 0, 0), 1, 2)

    def test_fiber_dimension(self):
        # the cotangent fiber has the dimension of the variety
        pairs = [("A7", 3, 15), ("C4", 4, 10), ("D5", 5, 10),
                 ("E6", 1, 16), ("E7", 7, 27)]
        for name, k, dim in pairs:
            rs = build_root_system(name)
            fiber = levi_fiber_character(rs, k, cotangent_weight(rs, k))
            assert fiber.mass() == dim
