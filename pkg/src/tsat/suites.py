"""Seeded property suites, shared by the acceptance tests and ``tsat selftest``."""

from __future__ import annotations

import itertools
import traceback
from dataclasses import dataclass, field

from . import dvrmod, heights, oracles, saturation, strength
from .errors import NotApplicable
from .groebner import reduced_gb
from .ring import DVR, Q, QT, Ideal, RingSpec, euler_combination, format_poly
from .scalars import TRat, tp, trat_normalize

DEFAULT_SEED = 20240611


@dataclass
class SuiteResult:
    name: str
    total: int = 0
    passed: int = 0
    failures: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.total > 0 and self.passed == self.total

    def record(self, ok: bool, what: str = ""):
        self.total += 1
        if ok:
            self.passed += 1
        elif len(self.failures) < 5:
            self.failures.append(what)

    def to_dict(self) -> dict:
        return {"name": self.name, "total": self.total, "passed": self.passed,
                "failures": self.failures, "notes": self.notes}

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} {self.name}: {self.passed}/{self.total}"


def _guard(res: SuiteResult, fn, label):
    try:
        ok = fn()
    except Exception as exc:  # a crash counts as a failed case, with the reason kept
        res.record(False, f"{label}: {type(exc).__name__}: {exc} @ {traceback.format_exc(limit=-1).strip()[:200]}")
        return
    res.record(bool(ok), label)


def _instances(seed, count):
    rng = oracles.make_rng(seed)
    for _ in range(count):
        ring, gens, d = oracles.random_sat_instance(rng)
        yield ring, saturation.GradedIdealPlus(ring, tuple(gens)), d


def _label(I, d):
    return f"{I} d={d}"


# ---------------------------------------------------------------------------
# saturation


def suite_sat_oracles(seed=DEFAULT_SEED, count=200) -> SuiteResult:
    res = SuiteResult("saturation agrees with both oracles")
    grew = 0
    for ring, I, d in _instances(seed, count):
        def case():
            nonlocal grew
            rep = saturation.sat_oracle(I, d)
            grew += bool(rep.result.new_gens)
            return rep.agree
        _guard(res, case, _label(I, d))
    res.notes["instances_with_new_generators"] = grew
    return res


def suite_stabilization(seed=DEFAULT_SEED, count=200, window=5, max_ell=25) -> SuiteResult:
    res = SuiteResult("Z-chain settles and Y_k is constant from ell on")
    worst = 0
    for ring, I, d in _instances(seed, count):
        def case():
            nonlocal worst
            out = saturation.sat_leq_d(I, d)
            for tr in out.traces:
                chain = tr.z_chain
                if any(not b <= a for a, b in zip(chain, chain[1:])):
                    return False
                if tr.ell > max_ell or chain[tr.ell] != chain[tr.ell - 1]:
                    return False
                worst = max(worst, tr.ell)
                for k in range(tr.ell, tr.ell + window + 1):
                    if not tr.piece.yk_space(k).same_as(tr.y_ell):
                        return False
            return True
        _guard(res, case, _label(I, d))
    res.notes["max_ell"] = worst
    return res


def suite_key_lemma(seed=DEFAULT_SEED, count=100) -> SuiteResult:
    """Tuples in ker rho ∩ X_k over ideals saturated below d: pi_k lands in Y_{k-1}, and the rewrite verifies."""
    res = SuiteResult("key lemma on sampled tuples")
    rng = oracles.make_rng(seed + 1)
    for _, I, d in _instances(seed, 10 * count):
        if res.total >= count:
            break
        # one degree above the generators, S_+E has room for lower-degree syzygies
        if d <= 2 and I.ring.nvars <= 2 and rng.random() < 0.5:
            d += 1
        low = saturation.sat_leq_d(I, d - 1)
        if low.unit:
            continue
        J = saturation.GradedIdealPlus(I.ring, tuple(low.gens))
        piece = saturation.DegreePiece(J, d)
        k = rng.randint(1, 3)
        if not piece.truncated_kernel(k):
            continue
        for _ in range(3):
            (tup,) = saturation.sample_xk_tuples(J, d, k, rng)
            if any(saturation._entries_mod_t(piece, tup.entries)):
                break
        if any(saturation._entries_mod_t(piece, tup.entries)):
            res.notes["nonzero_mod_t"] = res.notes.get("nonzero_mod_t", 0) + 1

        def case():
            val = saturation.pi_k(J, tup.entries, k)
            Yk1 = piece.yk_space(k - 1)
            if not Yk1.contains(saturation.poly_to_vector(val, piece.monos)):
                return False
            out = saturation.key_lemma_rewrite(tup, J, d)
            return out.t_order == k - 1 and saturation.pi_k(J, out.entries, k - 1) == val
        _guard(res, case, f"{J} d={d} k={k}")
    return res


WORKED = ("x1", "x1 + t^2*x2")


def suite_worked_example() -> SuiteResult:
    from .syntax import parse_poly
    res = SuiteResult("worked example (x, x + t^2 y), d = 1")
    ring = RingSpec(2, (1, 1), DVR)
    I = saturation.GradedIdealPlus(ring, tuple(parse_poly(s, ring) for s in WORKED))

    def case():
        out = saturation.sat_leq_d(I, 1)
        tr = out.traces[0]
        target = [parse_poly("x1", ring), parse_poly("x2", ring)]
        same = saturation.compare_degreewise(
            saturation.result_modules(out, 1),
            saturation.result_modules(saturation.SatResult(ring, 1, target), 1)) == []
        return same and tr.z_dims()[:3] == [1, 1, 0] and tr.ell <= 3 and [format_poly(g) for g in out.new_gens] == ["x2"]
    _guard(res, case, "worked example")
    return res


# ---------------------------------------------------------------------------
# strength


def _random_weighted_ring(rng, domain):
    n = rng.randint(1, 4)
    weights = tuple(rng.choice([1, 1, 1, 2, 3]) for _ in range(n))
    return RingSpec(n, weights, domain)


def suite_euler(seed=DEFAULT_SEED, count=100) -> SuiteResult:
    res = SuiteResult("weighted Euler identity")
    rng = oracles.make_rng(seed + 5)
    while res.total < count:
        ring = _random_weighted_ring(rng, rng.choice([Q, QT, DVR]))
        d = rng.randint(1, 6)
        if not ring.monomials(d):
            continue
        f = oracles.random_form(rng, ring, d, rng.randint(1, 5), tdeg=0 if ring.domain == Q else 2,
                                den_prob=0.0 if ring.domain == Q else 0.3)
        _guard(res, lambda: euler_combination(f) == f * d, format_poly(f))
    return res


def _random_pairs(rng, ring, n, dmin=2, dmax=4, tdeg=0):
    d = rng.randint(dmin, dmax)
    pairs = []
    for _ in range(n):
        a = rng.randint(1, d - 1)
        pairs.append((oracles.random_form(rng, ring, a, rng.randint(1, 3), tdeg=tdeg),
                      oracles.random_form(rng, ring, d - a, rng.randint(1, 3), tdeg=tdeg)))
    return pairs


def suite_strength_roundtrip(seed=DEFAULT_SEED, count=100) -> SuiteResult:
    res = SuiteResult("decomposition -> containment -> Euler reconstruction")
    rng = oracles.make_rng(seed + 6)
    while res.total < count:
        ring = RingSpec(rng.randint(2, 4), (), rng.choice([Q, QT]))
        n = rng.randint(1, 3)
        pairs = _random_pairs(rng, ring, n, tdeg=0 if ring.domain == Q else 1)
        f = sum((g * h for g, h in pairs), ring.zero())
        if not f:
            continue
        D = strength.StrengthDecomposition(pairs)

        def case():
            C = strength.decomposition_to_containment(f, D)
            if len(C.gens) != 2 * n:
                return False
            D2 = strength.containment_to_decomposition(f, C)
            # heights over Q(t) of random quartic Jacobians are too slow for a suite
            lb = strength.strength_lower_bound(f) if ring.domain == Q else 0
            return bool(strength.verify_decomposition(f, D2)) and len(D2) <= 2 * n and lb <= n
        _guard(res, case, format_poly(f))
    return res


def tame_instances(seed=DEFAULT_SEED, count=24):
    """Witnesses whose pairs have poles at t = 0 that cancel in the sum."""
    from .syntax import parse_poly
    ring = RingSpec(4, (), QT)

    def P(s):
        return parse_poly(s, ring)

    fixed = [
        (P("x1*x2"), [(P("t*x1"), P("1/t*x2"))]),
        (P("x1*x2 + t*x3*x4"), [(P("x1"), P("x2")), (P("t^2*x3"), P("1/t*x4"))]),
        (P("x1*x2"), [(P("x1 + 1/t*x3"), P("x2")), (P("-1/t*x3"), P("x2"))]),
        (P("x1^2*x2"), [(P("t^2*x1"), P("1/t^2*x1*x2"))]),
        (P("x1*x2 + x3*x4"), [(P("1/t*x1"), P("t*x2")), (P("x3/(1 + t)"), P("(1 + t)*x4"))]),
    ]
    out = [(f, strength.StrengthDecomposition(p)) for f, p in fixed]
    rng = oracles.make_rng(seed + 7)
    while len(out) < count:
        n = rng.randint(1, 2)
        pairs = _random_pairs(rng, ring, n, dmin=2, dmax=3, tdeg=1)
        f = sum((g * h for g, h in pairs), ring.zero())
        if not f:
            continue
        wit = []
        for g, h in pairs:
            a = rng.randint(1, 2)
            tt = ring.const(TRat.t_power(a))
            tinv = ring.const(TRat.t_power(-a))
            if rng.random() < 0.5:
                wit.append((g * tt, h * tinv))
            else:
                u = oracles.random_form(rng, ring, g.degree, 2, tdeg=0)
                wit += [(g + u * tinv, h), (-(u * tinv), h)]
        out.append((f, strength.StrengthDecomposition(wit)))
    return out


def suite_tame(seed=DEFAULT_SEED, count=24) -> SuiteResult:
    res = SuiteResult("bounded-denominator strength witnesses")
    for f, W in tame_instances(seed, count):
        def case():
            if strength.verify_decomposition(f, W).all_regular:
                return False  # every curated witness must have a pole
            out = strength.tame_strength(f, W)
            v = strength.verify_decomposition(out.f, out.decomposition)
            return bool(v) and v.all_regular and out.shift == 0
        _guard(res, case, format_poly(f))
    return res


# ---------------------------------------------------------------------------
# heights


def _random_dvr_ideal(rng, n, ngens, max_deg=2, tdeg=1, homogeneous=True):
    ring = RingSpec(n, (), DVR)
    gens = []
    for _ in range(ngens):
        d = rng.randint(1, max_deg)
        f = oracles.random_form(rng, ring, d, rng.randint(1, 3), tdeg=tdeg)
        if not homogeneous and rng.random() < 0.5:
            e = rng.randint(0, max_deg)
            if e != d:
                f = f + oracles.random_form(rng, ring, e, rng.randint(1, 2), tdeg=tdeg)
        gens.append(f)
    return ring, gens


def suite_heights_with_t(seed=DEFAULT_SEED, count=100) -> SuiteResult:
    res = SuiteResult("height formula for ideals containing t")
    rng = oracles.make_rng(seed + 8)
    for _ in range(count):
        ring, gens = _random_dvr_ideal(rng, rng.randint(1, 3), rng.randint(0, 3), homogeneous=False)
        I = Ideal(ring, [ring.t() * ring.const(oracles.random_regular(rng, 1).unit_part())] + gens)

        def case():
            rep = heights.height_dvr(I)
            return rep.height == rep.special + 1 == heights.height_with_t_via_qtx(I)
        _guard(res, case, str(I))
    return res


def suite_hauptidealsatz(seed=DEFAULT_SEED, count=100) -> SuiteResult:
    res = SuiteResult("adjoining one element raises height by at most one")
    rng = oracles.make_rng(seed + 9)
    skipped = 0
    while res.total < count:
        ring, gens = _random_dvr_ideal(rng, rng.randint(1, 3), rng.randint(0, 2), homogeneous=False)
        if rng.random() < 0.25:
            gens.append(ring.t())
        f = oracles.random_form(rng, ring, rng.randint(0, 2), rng.randint(1, 3), tdeg=1)
        if rng.random() < 0.5:
            f = f + oracles.random_form(rng, ring, rng.randint(1, 2), 1, tdeg=1)
        I = Ideal(ring, gens)
        try:
            rep = heights.hauptidealsatz_check(I, f)
        except NotApplicable:
            skipped += 1
            continue
        except Exception as exc:
            res.record(False, f"{I} + ({format_poly(f)}): {exc}")
            continue
        res.record(rep.holds, f"{I} + ({format_poly(f)})")
    res.notes["unit_cases_skipped"] = skipped
    return res


def random_maximal_chains(rng, n, count=2):
    """Maximal chains from (0) to (t, x1, ..., xn) built by adjoining generators in random orders."""
    ring = RingSpec(n, (), DVR)
    units = [1, -1, 2, 3, "1 + t", "2 - t", "1/(1 + t)"]
    forms = []
    for i in range(n):
        u = rng.choice(units)
        c = TRat.from_rat(u) if isinstance(u, int) else _unit(u)
        forms.append(ring.var(i) * ring.const(c))
    gens = [ring.t()] + forms
    chains = []
    for _ in range(count):
        order = gens[:]
        rng.shuffle(order)
        links = [Ideal(ring, order[:j]) for j in range(len(order) + 1)]
        chains.append(heights.PrimeChain(links))
    return chains


def _unit(s):
    return {"1 + t": TRat.from_tpoly(tp([1, 1])), "2 - t": TRat.from_tpoly(tp([2, -1])),
            "1/(1 + t)": trat_normalize(tp([1]), tp([1, 1]))}[s]


def suite_catenary(seed=DEFAULT_SEED, count=20) -> SuiteResult:
    res = SuiteResult("maximal syntactic chains between fixed endpoints have equal length")
    rng = oracles.make_rng(seed + 10)
    for _ in range(count):
        n = rng.randint(1, 3)
        C1, C2 = random_maximal_chains(rng, n)

        def case():
            rep = heights.catenary_compare(C1, C2)
            return rep.equal and all(rep.maximal) and rep.lengths[0] == rep.top_height == n + 1
        _guard(res, case, f"{C1} | {C2}")
    return res


def suite_directed_unions(seed=DEFAULT_SEED, count=50) -> SuiteResult:
    res = SuiteResult("height of the top of an ascending list is the maximum")
    rng = oracles.make_rng(seed + 11)
    for _ in range(count):
        ring, gens = _random_dvr_ideal(rng, rng.randint(1, 3), rng.randint(1, 4))
        if rng.random() < 0.3:
            gens.insert(rng.randrange(len(gens) + 1), ring.t())
        Js = [Ideal(ring, gens[:j]) for j in range(1, len(gens) + 1)]
        _guard(res, lambda: heights.directed_union_height(Js).holds, str(Js[-1]))
    return res


# ---------------------------------------------------------------------------
# dvrmod


def suite_dvrmod(seed=DEFAULT_SEED, count=100) -> SuiteResult:
    res = SuiteResult("Smith form, saturation and delta over Q[t]_(t)")
    rng = oracles.make_rng(seed + 12)
    for _ in range(count):
        M = oracles.random_dvr_matrix(rng)
        m = len(M)
        cols = [[M[i][j] for i in range(m)] for j in range(len(M[0]))]

        def case():
            mod = dvrmod.DVRSubmodule(m, cols)
            S = mod.smith
            if not dvrmod.check_smith(M, S) or S.divisors != sorted(S.divisors):
                return False
            top = max(S.divisors, default=0)
            for k in range(0, top + 3):
                if mod.delta(k) != oracles.delta_oracle(M, k, top):
                    return False
            sat = mod.saturate()
            if not sat.saturate().same_as(sat) or not sat.is_saturated() or not sat.contains_module(mod):
                return False
            for a, b in itertools.product(range(3), repeat=2):
                if not mod.sigma_k(a).sigma_k(b).same_as(mod.sigma_k(a + b)):
                    return False
            coef = [TRat.from_rat(rng.randint(-2, 2)).shift(rng.randint(0, 1)) for _ in cols]
            v = [sum((c * x for c, x in zip(coef, row)), TRat.from_rat(0)) for row in M]
            mem = mod.membership_with_cofactors(v)
            if not mem:
                return False
            back = [sum((c * x for c, x in zip(mem.cofactors, row)), TRat.from_rat(0)) for row in M]
            return back == v and all(c.is_regular() for c in mem.cofactors)
        _guard(res, case, str([[str(x) for x in r] for r in M]))
    return res


# ---------------------------------------------------------------------------
# determinism


def suite_gb_determinism(seed=DEFAULT_SEED, count=30) -> SuiteResult:
    res = SuiteResult("reduced bases ignore generator order and duplicates")
    rng = oracles.make_rng(seed + 13)
    for _ in range(count):
        n = rng.randint(2, 3)
        ring = RingSpec(n, (), rng.choice([Q, QT]))
        gens = [oracles.random_form(rng, ring, rng.randint(1, 2), rng.randint(1, 3),
                                    tdeg=0 if ring.domain == Q else 1) for _ in range(rng.randint(1, 3))]

        def case():
            base = [format_poly(g) for g in reduced_gb(gens)]
            for _ in range(3):
                perm = gens[:] + [rng.choice(gens)]
                rng.shuffle(perm)
                if [format_poly(g) for g in reduced_gb(perm)] != base:
                    return False
            return True
        _guard(res, case, str(gens))
    return res


SUITES = {
    "sat-oracles": suite_sat_oracles,
    "stabilization": suite_stabilization,
    "key-lemma": suite_key_lemma,
    "worked-example": lambda seed=None, count=None: suite_worked_example(),
    "euler": suite_euler,
    "strength-roundtrip": suite_strength_roundtrip,
    "tame": suite_tame,
    "heights-with-t": suite_heights_with_t,
    "hauptidealsatz": suite_hauptidealsatz,
    "catenary": suite_catenary,
    "directed-unions": suite_directed_unions,
    "dvrmod": suite_dvrmod,
    "gb-determinism": suite_gb_determinism,
}


def run_all(seed=DEFAULT_SEED, scale: float = 1.0) -> list:
    """Every suite at its default size times ``scale`` (at least one case each)."""
    import inspect
    out = []
    for name, fn in SUITES.items():
        params = inspect.signature(fn).parameters
        default = params["count"].default if "count" in params else None
        if default is None:
            out.append(fn())
            continue
        out.append(fn(seed=seed, count=max(1, int(round(default * scale)))))
    return out

