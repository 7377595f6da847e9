import math
from fractions import Fraction

import numpy as np
import pytest

from cgobstruct import (
    GAKnot,
    Piece,
    RootOfUnity,
    build_family,
    lt_nullity,
    lt_signature,
    seifert_matrix_T2,
    signature_at_minus_one,
    signature_function_samples,
    torus_signature_at_angle,
)
from cgobstruct.signatures import _hermitian_form
from cgobstruct.sturm import cyclotomic, signature_nullity_exact

from oracles import sturm_signature_nullity


def test_root_of_unity_reduction():
    assert RootOfUnity(2, 6) == RootOfUnity(1, 3)
    assert RootOfUnity(5, 5) == RootOfUnity(0, 1)
    assert RootOfUnity(7, 5) == RootOfUnity(2, 5)
    assert RootOfUnity(3, 6).order == 2
    assert RootOfUnity(1, 8).conjugate() == RootOfUnity(7, 8)
    with pytest.raises(ValueError):
        RootOfUnity(1, 0)


def test_seifert_matrix():
    V = seifert_matrix_T2(3)
    assert V.tolist() == [[-1, 1], [0, -1]]
    V5 = seifert_matrix_T2(5)
    assert V5.shape == (4, 4)
    eig = np.linalg.eigvalsh(V5 + V5.T)
    assert int(np.sign(eig).sum()) == -4
    with pytest.raises(ValueError):
        seifert_matrix_T2(4)
    with pytest.raises(ValueError):
        seifert_matrix_T2(1)


def test_seifert_matrix_determinant_contract():
    # det(tV - V^T) equals the Alexander polynomial up to units
    from cgobstruct import torus_alexander

    for q in (3, 5, 7):
        V = seifert_matrix_T2(q)
        # integer evaluation at a few points determines the degree-(q-1) poly
        for t in (2, 3, -2):
            det = round(np.linalg.det(t * V - V.T))
            expect = torus_alexander(q)(t)
            assert abs(det) == abs(expect), (q, t)


def test_lt_signature_trefoil_values():
    assert lt_signature(3, RootOfUnity(1, 3)) == -2
    assert lt_signature(3, RootOfUnity(1, 7)) == 0
    assert lt_signature(1, RootOfUnity(3, 7)) == 0
    assert lt_signature(3, RootOfUnity(0, 1)) == 0  # w = 1 convention
    for q in (3, 5, 7, 9):
        assert lt_signature(q, RootOfUnity(1, 2)) == -(q - 1)


def test_lt_signature_rejects_bad_q():
    with pytest.raises(ValueError):
        lt_signature(4, RootOfUnity(1, 3))
    with pytest.raises(ValueError):
        lt_signature(-3, RootOfUnity(1, 3))


def test_lt_nullity_values():
    assert lt_nullity(3, RootOfUnity(1, 6)) == 1
    assert lt_nullity(3, RootOfUnity(5, 6)) == 1
    assert lt_nullity(3, RootOfUnity(1, 3)) == 0
    assert lt_nullity(1, RootOfUnity(1, 5)) == 0
    for a in range(1, 83):
        assert lt_nullity(3, RootOfUnity(a, 83)) == 0  # gcd(83, 6) = 1


def test_nullity_matches_root_structure():
    # roots of (t^q + 1)/(t + 1): order divides 2q, not q, and is not 2
    for q in (3, 5, 9, 15):
        for m in range(2, 40):
            for a in range(1, m):
                order = m // math.gcd(a, m)
                expect = 1 if (2 * q) % order == 0 and q % order != 0 and order != 2 else 0
                assert lt_nullity(q, RootOfUnity(a, m)) == expect


def test_conjugation_symmetry():
    for q in (3, 5, 7):
        for m in (5, 7, 12, 30):
            for a in range(1, m):
                w, wbar = RootOfUnity(a, m), RootOfUnity(m - a, m)
                assert lt_signature(q, w) == lt_signature(q, wbar)
                assert lt_nullity(q, w) == lt_nullity(q, wbar)


def test_signature_even_when_nonsingular():
    for q in (3, 5, 7, 9):
        for m in (5, 7, 11, 13):
            for a in range(1, m):
                if lt_nullity(q, RootOfUnity(a, m)) == 0:
                    assert lt_signature(q, RootOfUnity(a, m)) % 2 == 0


def test_no_jump_before_first_alexander_root():
    # strictly inside angle (0, pi/q) the form stays definite-free: signature 0
    for q in (3, 5, 7, 9, 11, 13, 15):
        for j in range(1, 40):
            x = Fraction(j, 40 * q)  # angle x*pi < pi/q
            assert torus_signature_at_angle(q, x) == 0
        assert lt_signature(q, RootOfUnity(1, 4 * q)) == 0


def test_eigencount_matches_independent_sturm_oracle():
    for q in (3, 7, 15):
        for m in range(2, 31):
            for a in range(1, m):
                sig = lt_signature(q, RootOfUnity(a, m))
                nul = lt_nullity(q, RootOfUnity(a, m))
                assert (sig, nul) == sturm_signature_nullity(q, a, m), (q, a, m)


def test_exact_chain_matches_eigencount():
    for q in (3, 5, 9, 13):
        for m in range(2, 25):
            for a in range(1, m):
                sig, nul = signature_nullity_exact(q, a, m)
                assert sig == lt_signature(q, RootOfUnity(a, m)), (q, a, m)
                assert nul == lt_nullity(q, RootOfUnity(a, m)), (q, a, m)


def test_exact_chain_rejects_w_equal_one():
    with pytest.raises(ValueError):
        signature_nullity_exact(3, 0, 5)
    with pytest.raises(ValueError):
        signature_nullity_exact(3, 5, 5)


def test_cyclotomic_polynomials():
    assert cyclotomic(1) == (-1, 1)
    assert cyclotomic(2) == (1, 1)
    assert cyclotomic(3) == (1, 1, 1)
    assert cyclotomic(6) == (1, -1, 1)
    assert cyclotomic(12) == (1, 0, -1, 0, 1)
    sympy = pytest.importorskip("sympy")
    t = sympy.symbols("t")
    for m in range(1, 40):
        ours = list(cyclotomic(m))
        theirs = sympy.Poly(sympy.cyclotomic_poly(m, t), t).all_coeffs()[::-1]
        assert ours == [int(c) for c in theirs], m


def test_angle_formula_matches_hermitian_eigenvalues():
    # the exact lattice-count signature agrees with a numeric eigencount
    for q in (3, 5, 9):
        for num, den in ((1, 5), (2, 5), (1, 2), (3, 4), (7, 9), (13, 10), (9, 5)):
            x = Fraction(num, den)
            w = RootOfUnity(num, 2 * den)  # exp(i*pi*x)
            H = _hermitian_form(q, w)
            eig = np.linalg.eigvalsh(H)
            tau = 1e-8 * max(1.0, float(np.abs(H).sum(axis=1).max()))
            numeric = int((eig > tau).sum()) - int((eig < -tau).sum())
            assert torus_signature_at_angle(q, x) == numeric, (q, x)


def test_signature_at_minus_one(flagship):
    assert signature_at_minus_one(flagship) == 0
    assert signature_at_minus_one(GAKnot((Piece(1, 5, +1),))) == -4
    K = GAKnot((Piece(3, 7, +1), Piece(5, 11, -1)))
    assert signature_at_minus_one(K) == -(7 - 1) + (11 - 1)
    assert signature_at_minus_one(K + K.mirror()) == 0


def test_signature_samples_trefoil():
    K = GAKnot((Piece(1, 3, +1),))
    samples = signature_function_samples(K, 2)
    assert samples == [(Fraction(1, 2), -2)]
    # just above the jump at pi/3 the value is -2
    assert torus_signature_at_angle(3, Fraction(1, 3) + Fraction(1, 1000)) == -2
    assert torus_signature_at_angle(3, Fraction(1, 3) - Fraction(1, 1000)) == 0


def test_signature_samples_avoid_roots():
    # resolution 3 hits the trefoil jump at x = 1/3 exactly; half-step shifts it
    K = GAKnot((Piece(1, 3, +1),))
    samples = signature_function_samples(K, 3)
    assert samples[0] == (Fraction(1, 3) + Fraction(1, 6), -2)
    assert samples[1] == (Fraction(2, 3), -2)


def test_signature_samples_mirror_cancel():
    K = GAKnot((Piece(5, 7, +1), Piece(5, 7, -1)))
    assert all(v == 0 for _, v in signature_function_samples(K, 64))


def test_signature_samples_family_vanish(flagship):
    assert all(v == 0 for _, v in signature_function_samples(flagship, 257))


def test_precision_env_override(monkeypatch):
    monkeypatch.setenv("CG_OBSTRUCT_PRECISION", "6")
    assert lt_signature(3, RootOfUnity(1, 3)) == -2
    monkeypatch.setenv("CG_OBSTRUCT_PRECISION", "not-a-number")
    assert lt_signature(3, RootOfUnity(1, 5)) == lt_signature(3, RootOfUnity(4, 5))
