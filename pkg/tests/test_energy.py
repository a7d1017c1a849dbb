import math
import random
from fractions import Fraction

import pytest

from stablepairs import (
    Pair,
    StabilityProblem,
    TorusElement,
    WeightedVector,
    asymptotic_slope,
    certificate_normals,
    degree_of,
    energy_along,
    energy_at,
    futaki_gen,
    infimum_estimate,
    kempf_ness_distance,
    perturb,
    properness_slope_check,
    t_semistable,
)

from helpers import random_pair

FREE1 = StabilityProblem.free(1)
FREE2 = StabilityProblem.free(2)


def rank1_pair() -> Pair:
    # v supported at 0 with unit coefficient, w at +-1 with unit coefficients
    return Pair(
        WeightedVector([(0,)]),
        WeightedVector({(1,): 1, (-1,): 1}),
        FREE1,
    )


class TestEnergyAt:
    def test_unit_norms_vanish_at_identity(self):
        p = Pair(
            WeightedVector({(0,): 1}),
            WeightedVector({(1,): Fraction(1, 2), (-1,): Fraction(1, 2)}),
            FREE1,
        )
        assert energy_at(p, [0.0]) == pytest.approx(0.0, abs=1e-12)

    def test_closed_form(self):
        p = rank1_pair()
        assert energy_at(p, [0.0]) == pytest.approx(math.log(2), abs=1e-12)

    def test_dominant_term(self):
        p = rank1_pair()
        assert energy_at(p, TorusElement([-10.0])) == pytest.approx(20.0, abs=1e-6)

    def test_constraint_violation_rejected(self):
        prob = StabilityProblem.special_linear(1)
        p = Pair(WeightedVector([(1, 0)]), WeightedVector([(1, 0), (0, 1)]), prob)
        with pytest.raises(ValueError):
            energy_at(p, [1.0, 1.0])
        energy_at(p, [1.0, -1.0])  # admissible direction is fine


class TestEnergyAlong:
    def test_closed_form_curve(self):
        p = rank1_pair()
        for t in (0.5, 0.1, 0.01):
            expected = math.log(t**2 + t**-2)
            assert energy_along(p, (1,), t) == pytest.approx(expected, rel=1e-12)

    def test_zero_subgroup_is_constant(self):
        p = rank1_pair()
        vals = {round(energy_along(p, (0,), t), 12) for t in (0.9, 0.5, 0.1)}
        assert len(vals) == 1

    def test_t_one_is_identity_element(self):
        p = rank1_pair()
        assert energy_along(p, (1,), 1.0) == pytest.approx(energy_at(p, [0.0]))

    def test_t_outside_range_rejected(self):
        with pytest.raises(ValueError):
            energy_along(rank1_pair(), (1,), 1.5)


class TestAsymptoticSlope:
    def test_slope_matches_futaki_number(self):
        p = rank1_pair()
        assert asymptotic_slope(p, (1,)) == pytest.approx(futaki_gen((1,), p), abs=1e-6)

    def test_zero_subgroup(self):
        assert asymptotic_slope(rank1_pair(), (0,)) == pytest.approx(0.0, abs=1e-9)

    def test_witness_has_positive_slope(self):
        p = Pair(WeightedVector([(1, 0), (0, 1)]), WeightedVector([(1, 0)]), FREE2)
        u = t_semistable(p).witness
        assert asymptotic_slope(p, u) > 0.5

    def test_random_instances(self):
        rng = random.Random(888)
        for _ in range(30):
            rank = rng.randint(1, 3)
            p = random_pair(rng, rank=rank, max_points=5, lo=-2, hi=2, weighted=True)
            if p.problem.constraints:
                u = tuple(
                    rng.randint(-2, 2) * a
                    for a in ([1] * (rank - 1) + [-(rank - 1)] if rank > 1 else [0])
                )
                if sum(u) != 0:
                    continue
            else:
                u = tuple(rng.randint(-2, 2) for _ in range(rank))
            slope = asymptotic_slope(p, u)
            assert slope == pytest.approx(futaki_gen(u, p), abs=1e-6)


class TestKempfNessDistance:
    def test_symmetric_case(self):
        p = Pair(
            WeightedVector({(0,): 1}),
            WeightedVector({(0,): 1}),
            FREE1,
        )
        # equal norms: distance pi/4, log tan^2 = 0
        assert kempf_ness_distance(p, [0.0]) == pytest.approx(0.0, abs=1e-12)

    def test_rank1_closed_form(self):
        p = rank1_pair()
        assert kempf_ness_distance(p, [0.0]) == pytest.approx(math.log(2), rel=1e-12)

    def test_identity_with_energy_on_random_elements(self):
        rng = random.Random(1234)
        count = 0
        while count < 60:
            p = random_pair(rng, rank=rng.randint(1, 3), max_points=4, lo=-2, hi=2, weighted=True)
            rank = p.problem.rank
            s = [rng.uniform(-3, 3) for _ in range(rank)]
            if p.problem.constraints:
                mean = sum(s) / rank
                s = [x - mean for x in s]
            e = energy_at(p, s)
            if abs(e) > 16:
                continue  # arccos conditioning degrades past e^16 ratios
            count += 1
            assert math.isclose(kempf_ness_distance(p, s), e, rel_tol=1e-10, abs_tol=1e-10)


class TestInfimumEstimate:
    def test_unstable_flags_minus_infinity(self):
        p = Pair(WeightedVector([(1, 0), (0, 1)]), WeightedVector([(1, 0)]), FREE2)
        assert infimum_estimate(p) == -math.inf

    def test_semistable_rank1_bound(self):
        p = rank1_pair()
        est = infimum_estimate(p)
        assert math.isfinite(est)
        assert est <= math.log(2) + 1e-9

    def test_identical_vectors_reach_zero(self):
        wv = WeightedVector({(1, 0): 2, (0, 1): Fraction(1, 3)})
        p = Pair(wv, wv, FREE2)
        assert infimum_estimate(p) == pytest.approx(0.0, abs=1e-9)

    def test_dichotomy_matches_exact_verdict(self):
        rng = random.Random(55)
        unstable = 0
        for _ in range(200):
            p = random_pair(rng, rank=rng.randint(1, 3), max_points=4, lo=-3, hi=3, weighted=True)
            est = infimum_estimate(p, sweeps=1)
            flagged = est == -math.inf
            assert flagged == (not t_semistable(p).semistable)
            if flagged:
                unstable += 1
        assert unstable > 40


class TestPropernessSlope:
    def test_zero_subgroup(self):
        assert properness_slope_check(rank1_pair(), 3, 1, (0,))

    def test_stable_example_passes_all_normals(self):
        w = WeightedVector([(1, 0), (-1, 0), (0, 1), (0, -1)])
        p = Pair(WeightedVector([(0, 0)]), w, FREE2)
        q = degree_of(p.v, p.problem)
        for u in certificate_normals(p.w.support, p.problem.ctx):
            assert properness_slope_check(p, 1, q, u)

    def test_one_sided_hull_fails_forever(self):
        p = Pair(WeightedVector([(0, 0)]), WeightedVector([(0, 0), (1, 0)]), FREE2)
        q = degree_of(p.v, p.problem)
        # the -x direction never absorbs the reference polytope
        for m in (1, 2, 5, 17):
            assert not properness_slope_check(p, m, q, (1, 0))

    def test_slope_checks_match_perturbed_semistability(self):
        rng = random.Random(909)
        for _ in range(40):
            p = random_pair(rng, rank=rng.randint(1, 3), max_points=4, lo=-2, hi=2)
            q = degree_of(p.v, p.problem)
            m = rng.randint(1, 3)
            pert = perturb(p, m, q)
            normals = set(certificate_normals(pert.w.support, p.problem.ctx))
            normals |= set(certificate_normals(pert.v.support, p.problem.ctx))
            by_slopes = all(properness_slope_check(p, m, q, u) for u in normals)
            assert by_slopes == t_semistable(pert).semistable
