import cmath
import math

import numpy as np
import pytest

from siegelz.arith import GaussInt, QuarterSeries, series_mul
from siegelz.theta import (
    E5,
    E6,
    E_GENERATORS,
    FZ_TUPLE,
    G0,
    J4,
    apply_moebius,
    char_from_string,
    char_to_string,
    character_as_gauss,
    character_value,
    characteristic_action,
    characteristic_action_raw,
    cocycle,
    even_characteristics,
    fz_eval,
    fz_expansion,
    fz_orbit,
    gammaZ_generators,
    gammaZ_tuple_predicate,
    gl_embed,
    in_gamma2,
    in_gamma4,
    in_gamma24,
    in_gamma48,
    is_symplectic,
    kappa_squared,
    orbit_decomposition,
    pair_character_any_parity,
    parity,
    phase_phi,
    phi_after_g0,
    random_gamma2_elements,
    random_gamma48_elements,
    rescale4,
    siegel_point,
    six_tuple_eval,
    six_tuple_expansion,
    slash_character_exact,
    sp2z_generators,
    table1_char,
    table1_char_tuple,
    theta_eval,
    theta_expansion,
    translation,
    verify_igusa_transformation,
)

TAU_A = siegel_point(2j, 0, 2j)
TAU_B = siegel_point(2j, 0.5j, 2j)
TAU_GENERIC = siegel_point(1.9j + 0.2, 0.4j + 0.1, 2.3j - 0.15)


# ---------------------------------------------------------------------------
# characteristics

def test_parity_examples():
    assert parity((0, 0, 0, 0)) == "even"
    assert parity((1, 0, 1, 0)) == "odd"
    assert parity((0, 1)) == "even"
    assert parity((1, 1)) == "odd"


def test_ten_even_characteristics():
    evens = even_characteristics(2)
    assert len(evens) == 10
    assert len(even_characteristics(1)) == 3


def test_char_serialization():
    assert char_to_string((0, 1, 1, 0)) == "0110"
    assert char_from_string("0110") == (0, 1, 1, 0)


# ---------------------------------------------------------------------------
# expansions

def test_theta_expansion_genus1_even():
    t = theta_expansion((0, 0), 20)
    assert t.coeffs == {0: GaussInt(1), 4: GaussInt(2), 16: GaussInt(2)}


def test_theta_expansion_odd_vanishes():
    for order in (4, 21, 50, 113):
        assert theta_expansion((1, 1), order).is_zero()
    for m in [m for m in
              [(a, b, c, d) for a in (0, 1) for b in (0, 1) for c in (0, 1) for d in (0, 1)]
              if parity(m) == "odd"]:
        assert theta_expansion(m, 40).is_zero()


def test_theta_expansion_genus2():
    t = theta_expansion((0, 0, 0, 0), 4)
    assert t.coeffs == {
        (0, 0, 0): GaussInt(1),
        (4, 0, 0): GaussInt(2),
        (0, 0, 4): GaussInt(2),
    }


def test_theta_expansion_phases_in_zi():
    t = theta_expansion((1, 1, 1, 1), 30)
    assert t.coeffs and all(isinstance(c, GaussInt) for c in t.coeffs.values())
    assert all(e2 % 2 == 0 for (_, e2, _) in t.coeffs)


# ---------------------------------------------------------------------------
# numeric evaluation

def test_theta_eval_classical_value():
    # pi^(1/4) / Gamma(3/4), the classical value of the basic theta at i
    oracle = math.pi ** 0.25 / math.gamma(0.75)
    v = theta_eval((0, 0), 1j, 1e-12)
    assert 1.0 < v.real < 1.1
    assert abs(v - oracle) < 1e-12


def test_theta_eval_odd_zero():
    assert abs(theta_eval((1, 1), 1.7j, 1e-12)) < 1e-12
    assert abs(theta_eval((1, 0, 1, 0), TAU_B, 1e-12)) < 1e-12


def test_theta_eval_matches_expansion():
    for m in even_characteristics(2):
        for tau in (TAU_A, siegel_point(2j, 0.5j, 2j)):
            series_val = theta_expansion(m, 80).evaluate(np.asarray(tau))
            num_val = theta_eval(m, tau, 1e-12)
            assert abs(series_val - num_val) < 1e-10


def test_theta_eval_rejects_bad_tau():
    with pytest.raises(ValueError):
        theta_eval((0, 0), -1j, 1e-10)
    with pytest.raises(ValueError):
        theta_eval((0, 0, 0, 0), np.array([[1j, 0], [0, -2j]]), 1e-10)


# ---------------------------------------------------------------------------
# symplectic machinery

def test_generators_are_symplectic_level2():
    for M in E_GENERATORS:
        assert is_symplectic(M)
        assert in_gamma2(M)
    assert round(float(np.linalg.det(E5))) == 1


def test_congruence_predicates():
    t8 = translation([[8, 0], [0, 8]])
    assert in_gamma48(t8) and in_gamma4(t8) and in_gamma24(t8)
    t4 = translation([[4, 0], [0, 4]])
    assert in_gamma4(t4) and not in_gamma48(t4)
    assert in_gamma24(translation([[4, 2], [2, 4]]))


def test_characteristic_action_identity_and_minus():
    eye = np.eye(4, dtype=np.int64)
    for m in even_characteristics(2):
        red, phi = characteristic_action(eye, m)
        assert red == m and phi == 0
        red, phi = characteristic_action(E5, m)
        assert red == m and phi == 0


def test_characteristic_action_inversion_swaps():
    m = (1, 0, 0, 1)
    red, _ = characteristic_action(J4, m)
    assert red == (0, 1, 1, 0)


def test_characteristic_action_rejects_non_symplectic():
    with pytest.raises(ValueError):
        characteristic_action(np.eye(4, dtype=np.int64) * 2, (0, 0, 0, 0))


def test_action_respects_group_law_mod2():
    for M1 in E_GENERATORS[:4]:
        for M2 in E_GENERATORS[4:]:
            for m in even_characteristics(2):
                step = characteristic_action(M2, m)[0]
                twice = characteristic_action(M1, step)[0]
                joint = characteristic_action(M1 @ M2, m)[0]
                assert joint == twice


def test_squared_transformation_law():
    worst = 0.0
    for M in random_gamma2_elements(20, seed=1):
        for tau in (TAU_A, TAU_B):
            worst = max(worst, verify_igusa_transformation(
                even_characteristics(2), M, tau, 1e-13))
    assert worst < 1e-8


def test_verify_igusa_rejects_odd_and_outside_level2():
    with pytest.raises(ValueError):
        verify_igusa_transformation([(1, 0, 1, 0)], E_GENERATORS[0], TAU_A)
    with pytest.raises(ValueError):
        verify_igusa_transformation([(0, 0, 0, 0)], J4, TAU_A)


def test_kappa_squared_values():
    assert kappa_squared(E5) == 1
    for M in random_gamma2_elements(10, seed=4):
        assert kappa_squared(M) in (-1, 1)


# ---------------------------------------------------------------------------
# pair characters

def test_table1_spec_values():
    evens = even_characteristics(2)
    for m1 in evens[:3]:
        for m2 in evens[3:6]:
            assert table1_char(m1, m2, 5) == GaussInt(1)
    assert table1_char_tuple(FZ_TUPLE, 6) == GaussInt(-1)
    # a pair with total first-entry sum 2
    assert table1_char((1, 0, 0, 0), (1, 1, 0, 0), 7) == GaussInt(-1)


def test_table1_matches_exact_character():
    import itertools

    evens = even_characteristics(2)
    for i, M in enumerate(E_GENERATORS, start=1):
        for m1, m2 in itertools.combinations(evens, 2):
            exact = character_as_gauss(slash_character_exact((m1, m2), M))
            assert exact == table1_char(m1, m2, i), (i, m1, m2)


def test_table1_matches_numeric_ratio():
    import itertools

    evens = even_characteristics(2)
    tau = TAU_GENERIC
    for i, M in enumerate(E_GENERATORS, start=1):
        mtau = apply_moebius(M, tau)
        detj = complex(np.linalg.det(cocycle(M, tau)))
        th_m = {m: theta_eval(m, mtau, 1e-13) for m in evens}
        th_0 = {m: theta_eval(m, tau, 1e-13) for m in evens}
        for m1, m2 in itertools.combinations(evens, 2):
            ratio = th_m[m1] * th_m[m2] / (th_0[m1] * th_0[m2] * detj)
            assert abs(ratio - table1_char(m1, m2, i).to_complex()) < 1e-8


def test_table1_rejects_bad_input():
    with pytest.raises(ValueError):
        table1_char((0, 0, 0, 0), (0, 0, 0, 1), 11)
    with pytest.raises(ValueError):
        table1_char_tuple((), 1)


def test_odd_pairs_via_genus3_embedding():
    """The closed-form pair characters extend to odd characteristics.

    Verified through the even genus-3 cover, where the pair product is not
    identically zero: equal-parity pairs agree with the closed form on all
    ten generators; mixed-parity pairs agree except at the central element,
    where the odd member contributes its sign under negation.
    """
    import itertools

    allchars = [(a, b, c, d) for a in (0, 1) for b in (0, 1)
                for c in (0, 1) for d in (0, 1)]
    for i, M in enumerate(E_GENERATORS, start=1):
        for m1, m2 in itertools.combinations(allchars, 2):
            chi3 = character_as_gauss(pair_character_any_parity(m1, m2, M))
            expected = table1_char(m1, m2, i)
            mixed = (parity(m1) == "odd") != (parity(m2) == "odd")
            if mixed and i == 5:
                expected = expected * GaussInt(-1)
            assert chi3 == expected, (i, m1, m2)


# ---------------------------------------------------------------------------
# stabilizer predicates and generators

def test_gammaZ_predicate_fz():
    ms = FZ_TUPLE
    sums = (
        sum(m[1] * m[2] for m in ms),
        sum(m[2] * m[3] for m in ms),
        sum(m[2] for m in ms),
        sum(m[1] for m in ms),
        sum(m[0] * m[3] for m in ms),
        sum(m[3] for m in ms),
        sum(m[0] * m[2] for m in ms),
    )
    assert sums == (1, 1, 3, 2, 0, 2, 0)
    assert gammaZ_tuple_predicate(FZ_TUPLE)


def test_gammaZ_predicate_degenerate_inputs():
    assert not gammaZ_tuple_predicate(())
    assert not gammaZ_tuple_predicate(((0, 0, 0, 0),) * 6)


def test_gammaZ_generators_membership():
    gens = gammaZ_generators()
    assert len(gens) == 5
    for g in gens:
        assert in_gamma2(g)
        assert not in_gamma48(g)


def test_gammaZ_generators_fix_fz_character():
    for g in gammaZ_generators():
        assert character_value(slash_character_exact(FZ_TUPLE, g)) == pytest.approx(1)


# ---------------------------------------------------------------------------
# orbits

def test_orbit_decomposition_shape():
    orbits = orbit_decomposition()
    assert len(orbits) == 3
    assert sum(len(o) for o in orbits) == 210
    assert len(fz_orbit()) == 15


def test_orbit_closure_under_every_generator():
    from siegelz.theta import char_permutation

    orbits = orbit_decomposition()
    perms = [char_permutation(M) for M in sp2z_generators()]
    for orbit in orbits:
        for tup in orbit:
            for perm in perms:
                assert frozenset(perm[m] for m in tup) in orbit


def test_fz_orbit_exceptional_member():
    """Thirteen of the fourteen other members contain the 1111 or 1001
    characteristic; the one exception carries 1000 and 1100 instead (its
    degeneration still vanishes, which is what the membership is used for)."""
    orbit = fz_orbit()
    fz = frozenset(FZ_TUPLE)
    missing = [t for t in orbit
               if t != fz and (1, 1, 1, 1) not in t and (1, 0, 0, 1) not in t]
    assert len(missing) == 1
    exceptional = missing[0]
    assert (1, 0, 0, 0) in exceptional and (1, 1, 0, 0) in exceptional


# ---------------------------------------------------------------------------
# the six-theta product and its degeneration

def test_fz_expansion_leading_term_and_integrality():
    # two of the six factors have half-integral lattice support, so the
    # product has no constant term; the lowest term is 4 u3^2, matching
    # the nonvanishing degeneration
    fz = fz_expansion(60)
    assert fz.coefficient((0, 0, 0)) == GaussInt(0)
    assert fz.coefficient((0, 0, 2)) == GaussInt(4)
    assert min(e1 + e3 for (e1, _, e3) in fz.coeffs) == 2
    assert all(c.im == 0 for c in fz.coeffs.values())


def test_fz_expansion_matches_numeric():
    val_series = fz_expansion(80).evaluate([[2j, 0], [0, 2j]])
    val_numeric = fz_eval(TAU_A, 1e-13)
    assert abs(val_series - val_numeric) < 1e-10


def test_phi_after_g0_equals_theta_product():
    order = 120
    phi = phi_after_g0(fz_expansion(order))
    target = QuarterSeries.one(1, order)
    for m in ((0, 0), (0, 1), (1, 0)):
        t = theta_expansion(m, order)
        target = series_mul(target, series_mul(t, t))
    assert phi == target


def test_phi_kills_products_with_first_entry_one():
    for extra in ((1, 1, 1, 1), (1, 0, 0, 1)):
        tup = ((0, 0, 0, 0), (0, 0, 0, 1), (0, 0, 1, 0), (0, 0, 1, 1),
               (0, 1, 1, 0), extra)
        assert phi_after_g0(six_tuple_expansion(tup, 40)).is_zero()


def test_rescale4():
    s = QuarterSeries(1, 8, {4: 1})
    assert rescale4(s).coeffs == {16: GaussInt(1)}
    assert rescale4(s).order == 32


def test_fz_numeric_invariance():
    worst = 0.0
    for gamma in gammaZ_generators() + random_gamma48_elements(10, seed=2):
        for tau in (TAU_A, TAU_B):
            gtau = apply_moebius(gamma, tau)
            detj = complex(np.linalg.det(cocycle(gamma, tau)))
            worst = max(worst, abs(fz_eval(gtau, 1e-13) / detj ** 3 - fz_eval(tau, 1e-13)))
    assert worst < 1e-8


def test_fz_e6_antiinvariant():
    tau = TAU_B
    gtau = apply_moebius(E6, tau)
    detj = complex(np.linalg.det(cocycle(E6, tau)))
    assert abs(fz_eval(gtau, 1e-13) / detj ** 3 + fz_eval(tau, 1e-13)) < 1e-10


# ---------------------------------------------------------------------------
# helpers

def test_gl_embed_and_sp_generators():
    for U in ([[1, 1], [0, 1]], [[0, 1], [1, 0]]):
        assert is_symplectic(gl_embed(U))
    with pytest.raises(ValueError):
        gl_embed([[2, 0], [0, 1]])
    assert len(sp2z_generators()) == 6


def test_g0_is_symplectic_gl_type():
    assert is_symplectic(G0)
    tau = np.asarray(TAU_B)
    swapped = apply_moebius(G0, tau)
    assert swapped[0, 0] == tau[1, 1] and swapped[1, 1] == tau[0, 0]


def test_phase_phi_eighth_integers():
    from fractions import Fraction

    for M in E_GENERATORS:
        for m in even_characteristics(2):
            phi = phase_phi(M, m)
            assert (phi * 8).denominator == 1


def test_raw_action_reduces_to_fixed_char_on_level2():
    for M in random_gamma2_elements(8, seed=7):
        for m in even_characteristics(2):
            raw = characteristic_action_raw(M, m)
            assert tuple(int(v) % 2 for v in raw) == m
