"""Deterministic query complexity: reference values, the independent
decision-tree oracle, and structural properties."""

import itertools
import random

import pytest
from hypothesis import given, settings

import symquery as sq

from helpers import sym_fns, tree_search_depth

vec = sq.from_string


class TestReferenceValues:
    def test_balanced_promise(self):
        assert sq.d_complexity(vec("DJ:8,0")) == 5

    def test_balanced_promise_one_excluded(self):
        assert sq.d_complexity(vec("DJ:8,1")) == 6

    def test_or_total(self):
        assert sq.d_complexity(vec("OR:4")) == 4

    def test_constant_and_empty(self):
        assert sq.d_complexity(vec("11*1")) == 0
        assert sq.d_complexity(vec("***")) == 0

    def test_half_plus_k_plus_one_formula(self):
        for n in range(2, 21, 2):
            for k in range(n // 2):
                assert sq.d_complexity(sq.family_dj(n, k)) == n // 2 + k + 1

    def test_cap(self):
        f = sq.SymPartialFn(31, tuple([sq.FnValue.ZERO] * 32))
        with pytest.raises(ValueError):
            sq.d_complexity(f)


class TestAgainstTreeSearchOracle:
    def test_exhaustive_small_n(self):
        for n in range(1, 5):
            for vals in itertools.product("01*", repeat=n + 1):
                f = vec("".join(vals))
                assert sq.d_complexity(f) == tree_search_depth(f), str(f)

    def test_sampled_n5_n6(self):
        rng = random.Random(20240817)
        for n in (5, 6):
            for _ in range(120):
                f = vec("".join(rng.choice("01*") for _ in range(n + 1)))
                assert sq.d_complexity(f) == tree_search_depth(f), str(f)

    def test_families_n6(self):
        cases = [
            vec("DJ:6,0"), vec("DJ:6,2"), vec("OR:6"), vec("AND:6"),
            vec("PARITY:6"), vec("MAJ:6"), vec("EXACT:6,3"), vec("THRESHOLD:6,2"),
            vec("F1:6,3"), vec("F2:6,3"), vec("F3:6,3"), vec("DW:6,1,5"),
        ]
        for f in cases:
            assert sq.d_complexity(f) == tree_search_depth(f), str(f)


class TestProperties:
    @given(sym_fns(max_n=10))
    @settings(max_examples=60, deadline=None)
    def test_isomorphism_invariance(self, f):
        values = {sq.d_complexity(g) for g in sq.isomorphs(f)}
        assert len(values) == 1

    @given(sym_fns(max_n=10))
    @settings(max_examples=60, deadline=None)
    def test_dropping_weights_never_increases(self, f):
        base = sq.d_complexity(f)
        for w in f.domain_weights:
            values = list(f.values)
            values[w] = sq.FnValue.UNDEFINED
            g = sq.SymPartialFn(f.n, tuple(values))
            assert sq.d_complexity(g) <= base

    def test_quantum_advantage_direction(self):
        # measured quantum worst cases never exceed the classical optimum
        from symquery import algos

        for alg, params in [
            ("dj", {"n": 8, "k": 1}),
            ("dj", {"n": 10, "k": 3}),
            ("f1", {"n": 7}),
            ("f3", {"n": 7}),
            ("dw1", {"n": 8}),
            ("f2", {"n": 8, "k": 2}),
            ("f4", {"n": 7}),
        ]:
            f = algos.canonical_function(alg, params)
            report = algos.verify_exact(alg, params)
            assert report.worst_case_queries <= sq.d_complexity(f), alg
