import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from energygames import GameGraph, validate
from energygames.generators import (
    GenSpec,
    SplitMix64,
    generate,
    high_penalty_family,
    multiples_game,
    random_game,
    windowed_game,
)
from energygames.oracle import brute_force_penalty

from conftest import simple_cycles


class TestSplitMix64:
    def test_known_stream(self):
        # reference values for the documented state transition, seed 0
        rng = SplitMix64(0)
        assert [rng.next_u64() for _ in range(3)] == [
            16294208416658607535,
            7960286522194355700,
            487617019471545679,
        ]

    @given(st.integers(min_value=0, max_value=2**64 - 1))
    def test_same_seed_same_stream(self, seed):
        a, b = SplitMix64(seed), SplitMix64(seed)
        assert [a.next_u64() for _ in range(5)] == [b.next_u64() for _ in range(5)]

    @given(
        st.integers(min_value=0, max_value=2**32),
        st.integers(min_value=-100, max_value=100),
        st.integers(min_value=0, max_value=200),
    )
    def test_randint_in_range(self, seed, lo, width):
        value = SplitMix64(seed).randint(lo, lo + width)
        assert lo <= value <= lo + width


class TestRandomGame:
    def test_determinism(self):
        spec = GenSpec("random", n=4, m=8, max_weight=5, seed=1)
        assert random_game(spec) == random_game(spec)

    def test_single_node_rejected(self):
        with pytest.raises(ValueError):
            random_game(GenSpec("random", n=1, m=1, max_weight=3, seed=0))

    def test_too_many_edges_rejected(self):
        with pytest.raises(ValueError):
            random_game(GenSpec("random", n=3, m=7, max_weight=3, seed=0))

    def test_generated_instances_validate(self):
        for seed in range(50):
            spec = GenSpec(
                "random", n=2 + seed % 5, m=0, max_weight=1 + seed % 9, seed=seed, max_out=3
            )
            import dataclasses

            n = spec.n
            spec = dataclasses.replace(spec, m=min(n + seed % (2 * n), n * min(3, n - 1)))
            graph = random_game(spec)
            assert validate(graph).ok
            assert graph.n == spec.n and graph.m == spec.m
            assert all(abs(w) <= spec.max_weight for _, _, w in graph.edges)
            if spec.max_out:
                assert all(graph.out_degree(v) <= spec.max_out for v in range(graph.n))

    def test_distinct_edge_pairs(self):
        graph = random_game(GenSpec("random", n=5, m=15, max_weight=4, seed=9))
        pairs = [(s, d) for s, d, _ in graph.edges]
        assert len(set(pairs)) == len(pairs)


class TestHighPenaltyFamily:
    def test_structure(self):
        graph = high_penalty_family(choices=3, max_weight=8, seed=2)
        assert graph.n == 4 and graph.m == 6
        assert validate(graph).ok
        assert graph.out_degree(0) == 3
        for v in range(1, 4):
            assert graph.out_degree(v) == 1

    def test_cycle_dichotomy(self):
        for seed in range(40):
            cap = (2, 8, 24, 64)[seed % 4]
            graph = high_penalty_family(choices=1 + seed % 5, max_weight=cap, seed=seed)
            for total, length in simple_cycles(graph):
                assert total >= 1 or total <= -cap * length // 2

    def test_penalty_when_negative_branch_exists(self):
        hits = 0
        for seed in range(30):
            graph = high_penalty_family(choices=3, max_weight=8, seed=seed)
            totals = [
                graph.edges[2 * i][2] + graph.edges[2 * i + 1][2] for i in range(3)
            ]
            report = brute_force_penalty(graph)
            if any(t < 0 for t in totals):
                hits += 1
                assert report.graph_penalty >= 4  # W/2
            else:
                assert report.graph_penalty == float("inf")
        assert hits > 5

    def test_first_branch_always_positive(self):
        for seed in range(30):
            graph = high_penalty_family(choices=4, max_weight=16, seed=seed)
            assert graph.edges[0][2] + graph.edges[1][2] >= 1

    def test_weight_sweep_scales_exactly(self):
        base = high_penalty_family(choices=4, max_weight=8, seed=13)
        for factor, cap in ((8, 64), (64, 512)):
            scaled = high_penalty_family(choices=4, max_weight=cap, seed=13)
            assert scaled.owners == base.owners
            assert [(s, d) for s, d, _ in scaled.edges] == [
                (s, d) for s, d, _ in base.edges
            ]
            assert [w for _, _, w in scaled.edges] == [
                w * factor for _, _, w in base.edges
            ]


class TestWindowedGame:
    def test_degenerate_window_single_weight(self):
        spec = GenSpec(
            "window", n=4, m=8, max_weight=10, seed=3, d=1, delta=0, center_lo=-5, center_hi=-5
        )
        graph, centers = windowed_game(spec)
        assert centers == (-5,)
        assert all(w == -5 for _, _, w in graph.edges)

    def test_weights_within_windows(self):
        for seed in range(25):
            spec = GenSpec(
                "window",
                n=5,
                m=10,
                max_weight=12,
                seed=seed,
                d=2,
                delta=2,
                center_lo=-8,
                center_hi=8,
            )
            graph, centers = windowed_game(spec)
            for _, _, w in graph.edges:
                assert any(abs(w - c) <= spec.delta for c in centers)

    def test_determinism(self):
        spec = GenSpec(
            "window", n=4, m=8, max_weight=9, seed=77, d=2, delta=1, center_lo=-4, center_hi=4
        )
        assert windowed_game(spec) == windowed_game(spec)


class TestMultiplesGame:
    def test_weights_are_multiples(self):
        spec = GenSpec("multiples", n=5, m=10, max_weight=12, seed=4, granularity=3)
        graph = multiples_game(spec)
        assert all(w % 3 == 0 for _, _, w in graph.edges)
        assert validate(graph).ok


class TestDispatch:
    def test_families_roundtrip(self):
        for family, extra in (
            ("random", {}),
            ("multiples", {"granularity": 2}),
            ("window", {"d": 1, "delta": 1, "center_lo": -3, "center_hi": 3}),
            ("penalty", {"choices": 3}),
        ):
            spec = GenSpec(family, n=4, m=8, max_weight=6, seed=11, **extra)
            graph = generate(spec)
            assert isinstance(graph, GameGraph)

    def test_unknown_family_rejected(self):
        with pytest.raises(ValueError):
            generate(GenSpec("nope", n=3, m=4, max_weight=2, seed=0))
