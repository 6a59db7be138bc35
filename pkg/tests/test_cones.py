from fractions import Fraction as F
from itertools import combinations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ewmtool.cones import (
    GE,
    GT,
    FeasibilityProblem,
    cone_subspace_intersection,
    feasible,
    in_nonneg_span,
)
from ewmtool.linalg import dot, primitive_integer


def unit_tests(n, rel):
    return tuple((tuple(F(int(k == j)) for k in range(n)), rel) for j in range(n))


def test_sec8_distinguished_pair():
    p = FeasibilityProblem(
        ((0, 1, -1), (0, -1, 1)), unit_tests(3, GE), "strictly-positive"
    )
    ok, witness = feasible(p)
    assert ok and witness == (F(1), F(1))


def test_sec8_non_parabolic_triple():
    p = FeasibilityProblem(
        ((1, -1, 0), (-1, 1, 1), (0, -1, 1)), unit_tests(3, GT), "nonneg"
    )
    assert feasible(p) == (False, None)


def test_empty_tests_vacuous():
    ok, witness = feasible(FeasibilityProblem(((1, -5),), (), "nonneg"))
    assert ok and witness == (F(0),)
    ok, witness = feasible(FeasibilityProblem(((1, -5),), (), "strictly-positive"))
    assert ok and all(w >= 1 for w in witness)


def _verify_witness(p, witness):
    for i, (f, rel) in enumerate(p.tests):
        val = sum(c * dot(f, g) for c, g in zip(witness, p.generators))
        assert val >= 0
        if rel == GT:
            assert val > 0
    if p.coefficient_mode == "strictly-positive":
        assert all(c > 0 for c in witness)
    else:
        assert all(c >= 0 for c in witness)


def _grid_feasible(p, steps=(0, 1, 2, 3)):
    """Tiny brute-force search used as an independent confirmation."""
    for coeffs in product(steps, repeat=len(p.generators)):
        if p.coefficient_mode == "strictly-positive" and 0 in coeffs:
            continue
        good = True
        for f, rel in p.tests:
            val = sum(c * dot(f, g) for c, g in zip(coeffs, p.generators))
            if val < 0 or (rel == GT and val == 0):
                good = False
                break
        if good:
            return True
    return False


def test_feasible_agrees_with_grid_on_corpus_subsets(corpus):
    for case in corpus.values():
        d = case.datum
        if d is None or len(d.sigma) > 6:
            continue
        ids = d.color_ids()
        for k in (1, 2, 3):
            for combo in combinations(ids, k):
                gens = tuple(d.color(c).pairing for c in combo)
                for mode, rel in (("nonneg", GT), ("strictly-positive", GE)):
                    p = FeasibilityProblem(gens, unit_tests(len(d.sigma), rel), mode)
                    ok, witness = feasible(p)
                    if ok:
                        _verify_witness(p, witness)
                    else:
                        assert not _grid_feasible(p), (case.id, combo, mode)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_order_and_scaling_invariance(data):
    n = data.draw(st.integers(2, 4))
    m = data.draw(st.integers(1, 3))
    gens = data.draw(
        st.lists(
            st.tuples(*[st.integers(-3, 3) for _ in range(n)]),
            min_size=m,
            max_size=m,
        )
    )
    tests = unit_tests(n, data.draw(st.sampled_from([GE, GT])))
    mode = data.draw(st.sampled_from(["nonneg", "strictly-positive"]))
    base = feasible(FeasibilityProblem(tuple(gens), tests, mode))[0]

    perm = data.draw(st.permutations(list(range(m))))
    shuffled = tuple(gens[i] for i in perm)
    assert feasible(FeasibilityProblem(shuffled, tests, mode))[0] == base

    scale = data.draw(st.sampled_from([F(1, 2), F(2), F(5, 3)]))
    scaled = tuple(tuple(scale * x for x in g) for g in gens)
    assert feasible(FeasibilityProblem(scaled, tests, mode))[0] == base
    scaled_tests = tuple((tuple(scale * x for x in f), rel) for f, rel in tests)
    assert feasible(FeasibilityProblem(tuple(gens), scaled_tests, mode))[0] == base


def test_in_nonneg_span_examples():
    v = (F(1, 2), F(1), F(1, 2))
    rays = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    assert in_nonneg_span(v, rays)
    assert not in_nonneg_span(v, rays[:2])
    assert in_nonneg_span((0, 0), [])


def test_intersection_zero_cone():
    # parabolic subset of the G2 case: point quotient
    assert cone_subspace_intersection([(1, 0), (0, 1)], [(1, 0), (-1, 1)]) == []


def test_intersection_identity_without_kernels():
    rays = [(1, 0), (0, 1)]
    assert cone_subspace_intersection(rays, []) == [(F(0), F(1)), (F(1), F(0))]


def test_intersection_sec8_pair_keeps_two_rays():
    rays = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    kern = [(0, 1, -1), (0, -1, 1)]
    out = cone_subspace_intersection(rays, kern)
    assert sorted(out) == [(F(0), F(1), F(1)), (F(1), F(0), F(0))]


def test_intersection_output_contract(corpus):
    d = corpus["sec8_spin8_n3"].datum
    rays = [tuple(F(int(i == j)) for i in range(3)) for j in range(3)]
    kern = [d.color("D3").pairing, d.color("D4").pairing]
    out = cone_subspace_intersection(rays, kern)
    for r in out:
        assert all(dot(f, r) == 0 for f in kern)
        assert in_nonneg_span(r, rays)
        assert r == primitive_integer(r)
