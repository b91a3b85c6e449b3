import random
from fractions import Fraction

import pytest

from coopgraph import (
    AlphaModel,
    Modularity,
    Move,
    Multigraph,
    Partition,
    SizeGateError,
    STABLE,
    alpha_sweep,
    better_response,
    bruteforce_max_partition,
    canonical_form,
    iter_set_partitions,
    move_gain,
    nash_stable,
    pair_value,
    partition_threshold,
    potential,
)
from coopgraph.datasets import (
    example2_clique_partition,
    karate_split_15_19,
    karate_split_17_17,
)

from conftest import random_multigraph, random_partition


def frac(s):
    return Fraction(s)


class TestPairValue:
    def test_alpha_model(self):
        g = Multigraph([("a", "b", 3)], nodes=["a", "b", "c"])
        vf = AlphaModel(frac("1/4"))
        assert pair_value(vf, g, "a", "b") == frac("3/4")  # binarized
        assert pair_value(vf, g, "a", "c") == frac("-1/4")

    def test_same_node_rejected(self, example1):
        with pytest.raises(ValueError, match="distinct"):
            pair_value(AlphaModel(frac("1/4")), example1, "A", "A")

    def test_modularity_keeps_multiplicities(self, example1):
        # all degrees are 3 and m = 9 on the six-node multigraph
        vf = Modularity()
        assert pair_value(vf, example1, "B", "C") == frac("3/2")
        assert pair_value(vf, example1, "A", "B") == frac("1/2")
        assert pair_value(vf, example1, "B", "D") == frac("-1/2")

    def test_degree_normalized_beta(self, example1):
        vf = Modularity(beta=None)
        # beta_ij = 2m/(d_i d_j) turns the pair value into 2m A_ij/(d_i d_j) - gamma
        assert pair_value(vf, example1, "B", "C") == frac("36/9") - 1
        assert pair_value(vf, example1, "B", "D") == -1

    def test_gamma_scales_null_model(self, example1):
        vf = Modularity(gamma=frac("2"))
        assert pair_value(vf, example1, "B", "C") == 2 - 2 * frac("1/2")

    def test_alpha_bounds(self):
        with pytest.raises(ValueError):
            AlphaModel(frac("3/2"))

    def test_symmetry(self, example1):
        rng = random.Random(2)
        for vf in (AlphaModel(frac("1/3")), Modularity(gamma=frac("3/2")), Modularity(beta=None)):
            for _ in range(10):
                u, v = rng.sample(example1.labels, 2)
                assert pair_value(vf, example1, u, v) == pair_value(vf, example1, v, u)


class TestPotential:
    def test_karate_grand(self, karate):
        pot = potential(AlphaModel(frac("1/20")), karate, Partition.grand(karate.labels))
        assert (pot.intercept, pot.slope) == (78, -561)
        assert pot.value == 78 - 561 * frac("1/20")

    def test_example2_cliques(self, example2):
        pot = potential(AlphaModel(frac("1/2")), example2, example2_clique_partition())
        assert (pot.intercept, pot.slope) == (74, -74)

    def test_example1_modularity_values(self, example1):
        vf = Modularity()
        grand = potential(vf, example1, Partition.grand(example1.labels))
        assert grand.value == frac("3/2")
        assert grand.intercept is None
        split3 = potential(vf, example1, Partition([{"B", "C"}, {"A", "D"}, {"E", "F"}]))
        split2 = potential(vf, example1, Partition([{"A", "B", "C", "D"}, {"E", "F"}]))
        assert split3.value == split2.value == frac("7/2")
        best = potential(vf, example1, Partition([{"A", "B", "C"}, {"D", "E", "F"}]))
        assert best.value == 5

    def test_closed_form_matches_pairwise_sum(self):
        rng = random.Random(61)
        for _ in range(20):
            g = random_multigraph(rng, rng.randint(2, 8))
            p = random_partition(rng, g.labels)
            alpha = Fraction(rng.randint(0, 8), 8)
            vf = AlphaModel(alpha)
            direct = Fraction(0)
            for block in p.blocks:
                members = sorted(block)
                for i in range(len(members)):
                    for j in range(i + 1, len(members)):
                        direct += pair_value(vf, g, members[i], members[j])
            assert potential(vf, g, p).value == direct


class TestMoveGain:
    def test_zachary_node3_gain(self, karate):
        p = karate_split_15_19()
        vf = AlphaModel(frac("1/20"))
        src = p.block_of("3")
        tgt = 1 - src
        gain = move_gain(vf, karate, p, Move("3", src, tgt))
        assert gain == 3 * frac("1/20")

    def test_gain_is_potential_difference(self, karate):
        from coopgraph import apply_move

        p = karate_split_15_19()
        vf = AlphaModel(frac("1/20"))
        src = p.block_of("3")
        mv = Move("3", src, 1 - src)
        before = potential(vf, karate, p).value
        after = potential(vf, karate, apply_move(p, mv)).value
        assert after - before == move_gain(vf, karate, p, mv)
        assert (before, after) == (68 - 276 * frac("1/20"), 68 - 273 * frac("1/20"))

    def test_fresh_move_formula(self):
        # leaving a block of size q with k internal links loses k - (q-1) alpha
        g = Multigraph([("a", "b"), ("a", "c")], nodes=["a", "b", "c", "d"])
        vf = AlphaModel(frac("1/8"))
        p = Partition([{"a", "b", "c", "d"}])
        gain = move_gain(vf, g, p, Move("a", 0, None))
        k, q = 2, 4
        assert gain == -(k - (q - 1) * frac("1/8"))

    def test_example1_binarized_move(self, example1, example1_split):
        vf = AlphaModel(frac("1/5"))
        gain = move_gain(vf, example1, example1_split, Move("A", 0, 1))
        assert gain == -1 - frac("1/5")

    def test_random_gain_identity(self):
        from coopgraph import apply_move, enumerate_deviations

        rng = random.Random(71)
        for _ in range(40):
            g = random_multigraph(rng, rng.randint(2, 8))
            p = random_partition(rng, g.labels)
            node = rng.choice(sorted(p.nodes))
            moves = enumerate_deviations(p, node)
            if not moves:
                continue
            mv = rng.choice(moves)
            if rng.random() < 0.5 and g.m > 0:
                vf = Modularity(gamma=Fraction(rng.randint(0, 3), 2))
            else:
                vf = AlphaModel(Fraction(rng.randint(0, 8), 8))
            diff = potential(vf, g, apply_move(p, mv)).value - potential(vf, g, p).value
            assert move_gain(vf, g, p, mv) == diff


class TestNashStable:
    def test_example1_split_stable(self, example1, example1_split):
        stable, witness = nash_stable(AlphaModel(frac("1/5")), example1, example1_split)
        assert stable and witness is None

    def test_example1_grand_unstable_at_half(self, example1):
        stable, witness = nash_stable(
            AlphaModel(frac("1/2")), example1, Partition.grand(example1.labels)
        )
        assert not stable
        # first improving deviation in label order: a degree-2 node opens a
        # fresh block, gain 5 alpha - 2 = 1/2
        assert witness == Move("B", 0, None)
        assert move_gain(AlphaModel(frac("1/2")), example1, Partition.grand(example1.labels), witness) == frac("1/2")

    def test_k2_singletons_boundary(self):
        g = Multigraph([("u", "v")])
        stable, _ = nash_stable(AlphaModel(1), g, Partition.singletons(g.labels))
        assert stable  # gain 1 - alpha = 0 is not a strict improvement


class TestBetterResponse:
    def test_two_isolated_nodes_stay_apart(self):
        g = Multigraph(nodes=["u", "v"])
        final, trace = better_response(
            AlphaModel(frac("1/2")), g, Partition.singletons(g.labels)
        )
        assert trace.steps == ()
        assert final == Partition.singletons(g.labels)

    def test_k2_merges(self):
        g = Multigraph([("u", "v")])
        final, trace = better_response(
            AlphaModel(frac("1/2")), g, Partition.singletons(g.labels)
        )
        assert final == Partition.grand(g.labels)
        assert len(trace.steps) == 1
        assert trace.steps[0].gain == frac("1/2")

    def test_zachary_reaches_seventeen_split(self, karate):
        final, trace = better_response(
            AlphaModel(frac("1/20")), karate, karate_split_15_19()
        )
        assert trace.status == STABLE
        assert canonical_form(final) == canonical_form(karate_split_17_17())
        assert [s.move.node for s in trace.steps] == ["3", "10"]

    def test_example1_grand_is_second_stable_point(self, example1):
        # distinct from the global optimum at alpha = 1/5, yet no single
        # deviation improves, so dynamics stay put
        vf = AlphaModel(frac("1/5"))
        final, trace = better_response(vf, example1, Partition.grand(example1.labels))
        assert trace.steps == ()
        assert final == Partition.grand(example1.labels)
        assert nash_stable(vf, example1, final)[0]

    def test_output_always_nash_stable(self):
        rng = random.Random(83)
        for _ in range(15):
            g = random_multigraph(rng, rng.randint(2, 7))
            start = random_partition(rng, g.labels)
            vf = AlphaModel(Fraction(rng.randint(0, 6), 6))
            final, trace = better_response(vf, g, start)
            assert trace.status == STABLE
            assert nash_stable(vf, g, final)[0]
            after = [s.objective_after for s in trace.steps]
            assert all(b > a for a, b in zip(after, after[1:]))


class TestPartitionThreshold:
    def test_zachary_cutoffs(self, karate):
        from coopgraph.datasets import karate_split_16_18

        grand = Partition.grand(karate.labels)
        assert partition_threshold(karate, grand, karate_split_15_19()) == frac("2/57")
        assert partition_threshold(karate, grand, karate_split_16_18()) == frac("5/144")
        assert partition_threshold(karate, grand, karate_split_17_17()) == frac("10/289")

    def test_identical_forms_give_none(self, karate):
        assert partition_threshold(karate, karate_split_15_19(), karate_split_15_19()) is None

    def test_boundary_root_reported(self):
        g = Multigraph([("u", "v"), ("u", "w"), ("v", "w")])
        grand = Partition.grand(g.labels)
        singles = Partition.singletons(g.labels)
        # 3 - 3a meets 0 exactly at the range edge
        assert partition_threshold(g, grand, singles) == 1

    def test_out_of_range_root_gives_none(self):
        # triangle plus isolate: forms 3 - 3a and 0 - a meet at a = 3/2
        g = Multigraph([("a", "b"), ("b", "c"), ("a", "c")], nodes=["a", "b", "c", "d"])
        p1 = Partition([{"a", "b", "c"}, {"d"}])
        p2 = Partition([{"a", "d"}, {"b"}, {"c"}])
        assert partition_threshold(g, p1, p2) is None

    def test_parallel_forms_give_none(self):
        g = Multigraph([("u", "v")], nodes=["u", "v", "w"])
        p1 = Partition([{"u", "v"}, {"w"}])
        p3 = Partition([{"u", "w"}, {"v"}])
        assert partition_threshold(g, p1, p3) is None


class TestAlphaSweep:
    def test_example2_candidate_table(self, example2):
        cl = example2_clique_partition()
        g1, g2, g3, g4 = [set(b) for b in cl.blocks]
        labels = example2.labels
        candidates = [
            Partition.grand(labels),
            Partition([g1, g2 | g3 | g4]),
            Partition([g1, g2 | g3, g4]),
            cl,
            Partition([g1 | g2, g3 | g4]),
            Partition([g1 | g2 | g3, g4]),
            Partition([g1, g2, g3 | g4]),
            Partition([g1 | g2, g3, g4]),
        ]
        table = alpha_sweep(example2, candidates)
        intervals = [(r.alpha_lo, r.alpha_hi, r.intercept, r.slope) for r in table.rows]
        assert intervals == [
            (0, frac("1/144"), 78, -325),
            (frac("1/144"), frac("1/77"), 77, -181),
            (frac("1/77"), frac("1/15"), 76, -104),
            (frac("1/15"), 1, 74, -74),
        ]
        assert [len(r.partition) for r in table.rows] == [1, 2, 3, 4]

    def test_example1_breakpoint(self, example1, example1_split):
        table = alpha_sweep(example1, [Partition.grand(example1.labels), example1_split])
        assert [(r.alpha_lo, r.alpha_hi) for r in table.rows] == [
            (0, frac("1/9")),
            (frac("1/9"), 1),
        ]

    def test_k2_grand_wins_everywhere(self):
        g = Multigraph([("u", "v")])
        table = alpha_sweep(g, [Partition.grand(g.labels), Partition.singletons(g.labels)])
        assert len(table.rows) == 1
        assert table.rows[0].partition == Partition.grand(g.labels)
        assert (table.rows[0].alpha_lo, table.rows[0].alpha_hi) == (0, 1)

    def test_discovery_mode(self, example1):
        table = alpha_sweep(example1, grid=12)
        # discovery from singletons and grand must find the same envelope
        assert [(r.alpha_lo, r.alpha_hi, r.intercept, r.slope) for r in table.rows] == [
            (0, frac("1/9"), 7, -15),
            (frac("1/9"), 1, 6, -6),
        ]

    def test_empty_candidates_rejected(self, example1):
        with pytest.raises(ValueError, match="empty"):
            alpha_sweep(example1, [])

    def test_rows_abut_and_cover_range(self):
        rng = random.Random(19)
        for _ in range(10):
            g = random_multigraph(rng, rng.randint(3, 7), connected=True)
            candidates = [random_partition(rng, g.labels) for _ in range(6)]
            lo, hi = Fraction(rng.randint(0, 2), 8), Fraction(rng.randint(6, 8), 8)
            table = alpha_sweep(g, candidates, alpha_range=(lo, hi))
            assert table.rows[0].alpha_lo == lo
            assert table.rows[-1].alpha_hi == hi
            for a, b in zip(table.rows, table.rows[1:]):
                assert a.alpha_hi == b.alpha_lo
                assert a.partition != b.partition
            for row in table.rows:
                # the winner dominates every candidate at the midpoint
                mid = (row.alpha_lo + row.alpha_hi) / 2
                top = row.intercept + row.slope * mid
                for p in candidates:
                    assert potential(AlphaModel(mid), g, p).value <= top

    def test_range_validation(self, example1):
        with pytest.raises(ValueError, match="range"):
            alpha_sweep(example1, alpha_range=(frac("1/2"), frac("1/4")))


class TestBruteForce:
    def test_bell_numbers(self):
        assert sum(1 for _ in iter_set_partitions(range(6))) == 203
        assert sum(1 for _ in iter_set_partitions([])) == 1

    def test_example1_small_alpha_grand(self, example1):
        part, pot = bruteforce_max_partition(AlphaModel(frac("1/20")), example1)
        assert part == Partition.grand(example1.labels)

    def test_example1_larger_alpha_split(self, example1, example1_split):
        part, pot = bruteforce_max_partition(AlphaModel(frac("1/5")), example1)
        assert part == example1_split
        assert pot.value == 6 - 6 * frac("1/5")

    def test_example1_modularity_split(self, example1, example1_split):
        part, pot = bruteforce_max_partition(Modularity(), example1)
        assert part == example1_split
        assert pot.value == 5
        assert nash_stable(Modularity(), example1, part)[0]

    def test_size_gate(self):
        g = Multigraph([(f"v{i}", f"v{i+1}") for i in range(10)])  # 11 nodes
        with pytest.raises(SizeGateError, match="10"):
            bruteforce_max_partition(AlphaModel(0), g)

    def test_alpha_zero_grand_on_connected(self):
        rng = random.Random(97)
        for n in (3, 5, 7):
            g = random_multigraph(rng, n, connected=True)
            part, _ = bruteforce_max_partition(AlphaModel(0), g)
            assert part == Partition.grand(g.labels)

    def test_clique_partition_near_one(self, example2):
        stable, _ = nash_stable(
            AlphaModel(frac("99/100")), example2, example2_clique_partition()
        )
        assert stable


class TestModularityOnZachary:
    def test_better_response_lands_nash_stable(self, karate):
        vf = Modularity()
        final, trace = better_response(vf, karate, karate_split_15_19())
        assert trace.status == STABLE
        assert nash_stable(vf, karate, final)[0]
        assert canonical_form(final) == canonical_form(karate_split_17_17())

    def test_seventeen_split_is_modularity_stable(self, karate):
        stable, _ = nash_stable(Modularity(), karate, karate_split_17_17())
        assert stable
