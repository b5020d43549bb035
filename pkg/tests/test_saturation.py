import random

import pytest
from hypothesis import given, settings, strategies as st

from tsat.dvrmod import DVRSubmodule
from tsat.errors import InvariantError
from tsat.oracles import random_sat_instance, truncated_image_rank
from tsat.ring import DVR, RingSpec, format_poly
from tsat.scalars import TZERO
from tsat.saturation import (CofactorTuple, DegreePiece, GradedIdealPlus, SatResult, compare_degreewise, key_lemma_rewrite,
                             oracle_dvr, oracle_groebner, pi_k, poly_to_vector, result_modules, sample_xk_tuples,
                             sat_leq_d, sat_oracle, yk_space, zk_space)

from conftest import Ring

R = Ring(2, DVR)


def ideal(*texts, ring=R):
    return GradedIdealPlus(ring.spec, tuple(ring(s) for s in texts))


def module_of(ring, polys, d):
    return result_modules(SatResult(ring.spec, d, list(polys)), d)[d]


WORKED = ("x1", "x1 + t^2*x2")


class TestGradedIdeal:
    def test_requires_dvr(self):
        with pytest.raises(ValueError):
            GradedIdealPlus(RingSpec(1), ())

    def test_inhomogeneous(self):
        with pytest.raises(ValueError):
            ideal("x1 + x1^2")

    def test_zero_dropped(self):
        assert ideal("x1", "0").gens == (R("x1"),)


class TestYk:
    def test_divide_by_t(self):
        assert yk_space(ideal("t*x1"), 1, 1).same_as(module_of(R, [R("x1")], 1))

    def test_k0_is_the_ideal(self):
        Y = yk_space(ideal(*WORKED), 1, 0)
        assert Y.same_as(module_of(R, R.many("x1", "t^2*x2"), 1))
        assert not Y.contains(poly_to_vector(R("x2"), R.spec.monomials(1)))

    def test_k2(self):
        assert yk_space(ideal(*WORKED), 1, 2).same_as(module_of(R, R.many("x1", "x2"), 1))

    def test_k1_stays_put(self):
        Y = yk_space(ideal(*WORKED), 1, 1)
        assert Y.contains(poly_to_vector(R("t*x2"), R.spec.monomials(1)))
        assert not Y.contains(poly_to_vector(R("x2"), R.spec.monomials(1)))


class TestZk:
    def test_worked_chain(self):
        I = ideal(*WORKED)
        piece = DegreePiece(I, 1)
        assert piece.ebar_dim == 1
        assert [zk_space(I, 1, k).dim for k in (1, 2, 3, 4)] == [1, 1, 0, 0]
        # the class of (1, -1) spans Z_1
        assert piece.rho([1, -1])[0] != 0 and zk_space(I, 1, 1).contains(piece.rho([1, -1]))

    def test_t_free_without_syzygy(self):
        I = ideal("x1", "x2")
        assert DegreePiece(I, 1).ebar_dim == 0
        assert all(zk_space(I, 1, k).dim == 0 for k in (1, 2, 3))

    def test_t_free_with_syzygy(self):
        # Ē is nonzero but every Z_k is the image of the exact syzygy (1, -1)
        I = ideal("x1", "x1")
        assert [zk_space(I, 1, k).dim for k in (1, 2, 3)] == [1, 1, 1]

    def test_zero_fiber(self):
        # f(0) = 0: every constant cofactor is a syzygy mod t, so Ē is everything
        I = ideal("t*x1")
        piece = DegreePiece(I, 1)
        assert piece.ebar_dim == 1
        assert [piece.zk_space(k).dim for k in (1, 2)] == [1, 0]
        assert piece.z_final().dim == 0

    def test_bad_k(self):
        with pytest.raises(ValueError):
            zk_space(ideal("x1"), 1, 0)


class TestKeyLemma:
    def test_worked_rewrite(self):
        I = ideal(*WORKED)
        tup = CofactorTuple((R("t"), R("-t")), 1, 2)
        assert pi_k(I, tup.entries, 2) == R("-t*x2")
        out = key_lemma_rewrite(tup, I, 1)
        assert out.t_order == 1
        assert out.entries == (R("1"), R("-1"))
        assert pi_k(I, out.entries, 1) == R("-t*x2")

    def test_exact_syzygy(self):
        # x2 * (1, -1) comes from a lower-degree syzygy, so rho vanishes
        I = ideal("x1", "x1")
        tup = CofactorTuple((R("x2"), R("-x2")), 2, 1)
        assert not pi_k(I, tup.entries, 1)
        out = key_lemma_rewrite(tup, I, 2)
        assert out.t_order == 0 and not pi_k(I, out.entries, 0)

    def test_refuses_new_syzygy(self):
        # the Koszul syzygy is a new generator of the syzygy module: rho is not zero
        I = ideal("x1", "x2")
        with pytest.raises(ValueError):
            key_lemma_rewrite(CofactorTuple((R("x2"), R("-x1")), 2, 1), I, 2)

    def test_not_in_xk(self):
        with pytest.raises(ValueError):
            pi_k(ideal(*WORKED), (R("1"), R("0")), 1)

    def test_sampled_tuples_land_in_previous_y(self):
        I = GradedIdealPlus(R.spec, tuple(sat_leq_d(ideal(*WORKED), 1).gens))
        rng = random.Random(5)
        piece = DegreePiece(I, 2)
        for k in (1, 2, 3):
            for tup in sample_xk_tuples(I, 2, k, rng, count=3):
                val = pi_k(I, tup.entries, k)
                assert piece.yk_space(k - 1).contains(poly_to_vector(val, piece.monos))
                out = key_lemma_rewrite(tup, I, 2)
                assert out.t_order == k - 1 and pi_k(I, out.entries, k - 1) == val


class TestSatLeqD:
    def test_divide_by_t(self):
        res = sat_leq_d(ideal("t*x1"), 1)
        assert res.new_gens == [R("x1")]

    def test_worked(self):
        res = sat_leq_d(ideal(*WORKED), 1)
        assert [format_poly(g) for g in res.new_gens] == ["x2"]
        tr = res.traces[0]
        assert tr.z_dims()[:3] == [1, 1, 0] and tr.ell <= 3
        target = result_modules(SatResult(R.spec, 1, R.many("x1", "x2")), 1)
        assert compare_degreewise(result_modules(res, 1), target) == []

    def test_already_saturated(self):
        I = ideal("x1^2 + t*x2^2")
        res = sat_leq_d(I, 2)
        assert res.new_gens == []
        assert sat_oracle(I, 2, res).agree

    def test_unit(self):
        res = sat_leq_d(ideal("t"), 2)
        assert res.unit and res.to_dict()["unit_ideal"]

    def test_t_power_times_unit(self):
        res = sat_leq_d(ideal("(t^2 + t^3)*x1*x2"), 2)
        assert res.new_gens == [R("x1*x2")]

    def test_negative_degree(self):
        with pytest.raises(ValueError):
            sat_leq_d(ideal("x1"), -1)

    @pytest.mark.parametrize("gens,d", [(WORKED, 1), (("t*x1",), 1), (("x1^2 + t*x2^2",), 2),
                                        (("x1^2", "x1^2 + t*x1*x2"), 3)])
    def test_both_oracles(self, gens, d):
        assert sat_oracle(ideal(*gens), d).agree

    def test_routes_agree_with_each_other(self):
        I = ideal("x1^2", "x1^2 + t^2*x2^2", "t*x1*x2")
        assert compare_degreewise(oracle_dvr(I, 3), oracle_groebner(I, 3)) == []


def _instance(seed):
    ring, gens, d = random_sat_instance(random.Random(seed), max_vars=2, max_deg=2)
    return GradedIdealPlus(ring, tuple(gens)), d


def _rank(M, N):
    cols = M.generators
    if not cols:
        return 0
    return truncated_image_rank([[g[i] for g in cols] for i in range(M.ambient_rank)], N)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_zk_chain_two_ways_and_sandwich(seed):
    I, d = _instance(seed)
    if any(f.degree == 0 for f in I.gens):
        return
    piece = DegreePiece(I, d)
    prev = None
    for k in range(1, 6):
        z = piece.zk_space(k)
        assert z == piece.zk_space_smith(k)
        assert z.dim <= piece.ebar_dim
        if prev is not None:
            assert z <= prev
        prev = z
    sat = oracle_dvr(I, d)[d]
    Yprev = piece.yk_space(0)
    assert Yprev.same_as(piece.module)
    for k in range(1, 5):
        Y = piece.yk_space(k)
        assert Y.contains_module(Yprev) and sat.contains_module(Y)
        # t^k Y_k lies in I_d
        for g in Y.generators:
            assert piece.module.contains([c.shift(k) for c in g])
        # dim Y_k / Y_{k-1} = #{divisors >= k}; the left side from truncated ranks, r_N(Y_k) - r_N(Y_{k-1})
        N = max(piece.module.divisors, default=0) + 2
        quotient = _rank(Y, N) - _rank(Yprev, N)
        assert quotient == sum(1 for a in piece.module.divisors if a >= k)
        for g in Y.generators:
            assert Yprev.contains([c.shift(1) for c in g])
        Yprev = Y


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_sat_properties(seed):
    I, d = _instance(seed)
    try:
        res = sat_leq_d(I, d)
    except InvariantError as exc:  # pragma: no cover - would be a bug
        raise AssertionError(str(exc))
    rep = sat_oracle(I, d, res)
    assert rep.agree, rep.to_dict()
    if res.unit:
        return
    # idempotent, and monotone in d
    again = sat_leq_d(GradedIdealPlus(I.ring, tuple(res.gens)), d)
    assert again.new_gens == []
    low = sat_leq_d(I, d - 1) if d >= 1 else None
    if low is not None and not low.unit:
        A, B = result_modules(low, d), result_modules(res, d)
        assert all(B[e].contains_module(A[e]) for e in A)
    # generator order does not change the degree pieces
    rev = sat_leq_d(GradedIdealPlus(I.ring, tuple(reversed(I.gens))), d)
    assert compare_degreewise(result_modules(rev, d), result_modules(res, d)) == []


def _combine(gens, cofactors, n):
    out = [TZERO] * n
    for c, g in zip(cofactors, gens):
        if c:
            out = [a + c * b for a, b in zip(out, g)]
    return out


def test_stable_z_split_on_worked_example():
    I = ideal("x1", "x1 + t^2*x2")
    piece = DegreePiece(I, 1)
    assert piece.zk_space(1) == piece.zk_space(2)
    gens = piece.yk_space(0).generators + [[c.shift(1) for c in g] for g in piece.yk_space(2).generators]
    assert DVRSubmodule(2, gens).contains_module(piece.yk_space(1))
    assert not piece.yk_space(1).same_as(piece.yk_space(0))


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**6))
def test_stable_z_splits_y_explicitly(seed):
    # once the degrees below d are saturated, Z_k = Z_{k+m} forces Y_k into Y_{k-1} + t^m Y_{k+m}
    I, d = _instance(seed)
    if d >= 1:
        low = sat_leq_d(I, d - 1)
        if low.unit:
            return
        I = GradedIdealPlus(I.ring, tuple(low.gens))
    if any(f.degree == 0 for f in I.gens):
        return
    piece = DegreePiece(I, d)
    n = piece.module.ambient_rank
    for k in range(1, 4):
        for m in range(1, 3):
            if piece.zk_space(k) != piece.zk_space(k + m):
                continue
            gens = piece.yk_space(k - 1).generators + [[c.shift(m) for c in g] for g in piece.yk_space(k + m).generators]
            split = DVRSubmodule(n, gens)
            for y in piece.yk_space(k).generators:
                mem = split.membership_with_cofactors(y)
                assert mem.member, mem.obstruction
                assert all(c.is_regular() for c in mem.cofactors)
                assert _combine(gens, mem.cofactors, n) == y


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_low_degrees_are_closed_after_saturation(seed):
    # no f of degree <= d outside the result has t f inside it
    I, d = _instance(seed)
    res = sat_leq_d(I, d)
    if res.unit:
        return
    J = GradedIdealPlus(I.ring, tuple(res.gens))
    for e in range(d + 1):
        if J.ring.monomials(e):
            assert DegreePiece(J, e).module.is_saturated()
