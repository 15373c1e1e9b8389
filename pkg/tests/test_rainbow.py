"""
created matt_dumont
on: 17/10/26
"""
import unittest
import warnings
import numpy as np
from komanawa.rainbow_tools.matroids import (ScaleLimitError, check_matroid_axioms, free_matroid, independent_sets,
                                             partition_matroid, same_matroid, uniform_matroid, from_circuits)
from komanawa.rainbow_tools.complexes import SimplicialComplex
from komanawa.rainbow_tools.homology import ETA_INF
from komanawa.rainbow_tools.rainbow import (InstanceValidationError, LayeredElement, LayeredGround, RainbowSelection,
                                            make_instance, degree_hypothesis_failures, check_degree_hypothesis,
                                            check_uniform_size_hypothesis, sort_sets_by_size, layered_ground,
                                            lift_matroid, build_complex, complex_hypergraph, find_rainbow,
                                            brute_force_rainbow, verify_selection, matchability_check,
                                            layered_matchability, find_lemma_indices, lemma_hypergraph,
                                            partition_intersection_complex, lemma_main_check, proof_step_report)
from komanawa.rainbow_tools.campaigns import random_matroid, gen_random_instance, InfeasibleInstanceError


def drisko_n2():
    """
    the Drisko n=2 instance from the matrix with columns (1,2), (1,2), (2,1)
    """
    return make_instance(partition_matroid([{0, 1}, {2, 3}]), partition_matroid([{0, 2}, {1, 3}]),
                         [{0, 3}, {0, 3}, {1, 2}], 2)


def cycle_n2():
    """
    the two perfect matchings of the 4-cycle
    """
    return make_instance(partition_matroid([{0, 3}, {1, 2}]), partition_matroid([{0, 1}, {2, 3}]),
                         [{0, 2}, {1, 3}], 2)


class TestInstance(unittest.TestCase):

    def test_validation(self):
        with self.assertRaises(InstanceValidationError) as ctx:
            make_instance(uniform_matroid(3, 1), free_matroid(3), [{0}, {1, 2}], 1)
        self.assertEqual(ctx.exception.bad_sets, [(2, 'M')])
        with self.assertRaises(InstanceValidationError) as ctx:
            make_instance(uniform_matroid(3, 1), uniform_matroid(3, 1), [{0, 1}], 1)
        self.assertEqual(ctx.exception.bad_sets, [(1, 'M'), (1, 'N')])
        inst = make_instance(uniform_matroid(3, 1), free_matroid(3), [{1, 2}], 1, validate=False)
        self.assertEqual(inst.candidate_count, 2)
        with self.assertRaises(ValueError):
            make_instance(free_matroid(3), free_matroid(4), [], 0)
        with self.assertRaises(ValueError):
            make_instance(free_matroid(3), free_matroid(3), [{5}], 1)

    def test_hypotheses(self):
        inst = drisko_n2()
        self.assertTrue(check_degree_hypothesis(inst))
        self.assertTrue(check_uniform_size_hypothesis(inst))
        inst = make_instance(free_matroid(4), free_matroid(4), [{0, 1}, {2}, {0, 3}], 2)
        self.assertEqual(degree_hypothesis_failures(inst), [2])
        self.assertFalse(check_degree_hypothesis(inst))
        self.assertFalse(check_uniform_size_hypothesis(inst))
        ordered = sort_sets_by_size(inst)
        self.assertEqual(ordered.sets, (frozenset({2}), frozenset({0, 1}), frozenset({0, 3})))
        self.assertTrue(check_degree_hypothesis(ordered))
        self.assertFalse(check_degree_hypothesis(cycle_n2()))


class TestLayered(unittest.TestCase):

    def test_layered_ground(self):
        layered = layered_ground([{0}, {0, 1}])
        self.assertEqual(list(layered), [(0, 1), (0, 2), (1, 2)])
        self.assertEqual(str(layered[2]), '(1 2)')
        self.assertEqual(layered.layers, [1, 2])
        self.assertEqual(layered.by_layer(2), frozenset({1, 2}))
        self.assertEqual(layered_ground([]), ())
        twin = layered_ground([{0}, {0}])
        self.assertEqual(len(twin), 2)
        self.assertEqual({p.element for p in twin}, {0})
        with self.assertRaises(ValueError):
            LayeredGround([(0, 1), (0, 1)])

    def test_lift_matroid(self):
        lifted = lift_matroid(free_matroid(2), layered_ground([{0, 1}]))
        self.assertTrue(same_matroid(lifted, free_matroid(2)))
        lifted = lift_matroid(free_matroid(1), layered_ground([{0}, {0}]))
        self.assertFalse(lifted.is_independent({0, 1}))
        lifted = lift_matroid(uniform_matroid(3, 1), layered_ground([{0}, {1}]))
        self.assertFalse(lifted.is_independent({0, 1}))

    def test_lift_matroid_axioms(self):
        rng = np.random.default_rng(2)
        for i in range(20):
            matroid = random_matroid(rng, 4)
            sets = [np.flatnonzero(rng.random(4) < 0.5).tolist() for _ in range(3)]
            layered = layered_ground(sets)
            lifted = lift_matroid(matroid, layered)
            with self.subTest(i=i, matroid=matroid, sets=sets):
                family = independent_sets(lifted)
                self.assertTrue(check_matroid_axioms(lifted.ground, family).ok)
                for s in family:
                    elements = [layered[j].element for j in s]
                    self.assertEqual(len(set(elements)), len(elements))
                    self.assertTrue(matroid.is_independent(elements))

    def test_build_complex(self):
        cplx = build_complex(free_matroid(2), layered_ground([{0, 1}]), cross_check=True)
        self.assertEqual(cplx.facets, (frozenset({0}), frozenset({1})))
        cplx = build_complex(free_matroid(1), layered_ground([{0}, {0}]), cross_check=True)
        self.assertNotIn({0, 1}, cplx)
        self.assertEqual(cplx.facets, (frozenset({0}), frozenset({1})))

    def test_build_complex_cross_check(self):
        rng = np.random.default_rng(4)
        for i in range(20):
            matroid = random_matroid(rng, 4)
            sets = [np.flatnonzero(rng.random(4) < 0.6).tolist() for _ in range(3)]
            with self.subTest(i=i, matroid=matroid, sets=sets):
                layered = layered_ground(sets)
                build_complex(matroid, layered, cross_check=True)
                self.assertEqual(complex_hypergraph(matroid, layered).ground, frozenset(range(len(layered))))

    def test_lemma_construction_matches_complex(self):
        # blocks {(0 1)} and {(1 2), (2 2)}
        layered = layered_ground([{0}, {1, 2}])
        blocks = [layered.by_layer(1), layered.by_layer(2)]
        for matroid in [free_matroid(3), uniform_matroid(3, 1), from_circuits(3, [{0, 2}])]:
            with self.subTest(matroid=matroid):
                lifted = lift_matroid(matroid, layered)
                self.assertEqual(partition_intersection_complex(blocks, lifted), build_complex(matroid, layered))


class TestFindRainbow(unittest.TestCase):

    def test_single(self):
        inst = make_instance(free_matroid(2), free_matroid(2), [{1}], 1)
        sel = find_rainbow(inst)
        self.assertEqual(str(sel), '(1 1)')
        self.assertTrue(verify_selection(inst, sel))

    def test_cycle_has_none(self):
        inst = cycle_n2()
        self.assertIsNone(find_rainbow(inst))
        self.assertIsNone(brute_force_rainbow(inst))

    def test_drisko(self):
        inst = drisko_n2()
        sel = find_rainbow(inst)
        self.assertEqual(str(sel), '(0 1) (3 2)')
        self.assertEqual(sel.layers, [1, 2])
        self.assertEqual(sel.elements, frozenset({0, 3}))
        self.assertTrue(verify_selection(inst, sel))

    def test_target_zero(self):
        inst = make_instance(free_matroid(1), free_matroid(1), [], 0)
        self.assertEqual(len(find_rainbow(inst)), 0)
        self.assertTrue(verify_selection(inst, RainbowSelection(())))

    def test_verify_selection_rejects(self):
        inst = drisko_n2()
        repeated_layer = RainbowSelection((LayeredElement(0, 1), LayeredElement(3, 1)))
        self.assertFalse(verify_selection(inst, repeated_layer))
        wrong_set = RainbowSelection((LayeredElement(1, 1), LayeredElement(3, 2)))
        self.assertFalse(verify_selection(inst, wrong_set))
        too_short = RainbowSelection((LayeredElement(0, 1),))
        self.assertFalse(verify_selection(inst, too_short))
        dependent = RainbowSelection((LayeredElement(0, 1), LayeredElement(1, 3)))
        self.assertFalse(verify_selection(inst, dependent))
        outside = RainbowSelection((LayeredElement(0, 1), LayeredElement(3, 7)))
        self.assertFalse(verify_selection(inst, outside))

    def test_scale_limit(self):
        inst = make_instance(free_matroid(30), free_matroid(30), [range(30), range(15)], 2)
        with self.assertRaises(ScaleLimitError):
            find_rainbow(inst)
        self.assertIsNotNone(find_rainbow(inst, max_candidates=45))

    def test_matches_brute_force(self):
        rng = np.random.default_rng(17)
        for i in range(60):
            ground = int(rng.integers(3, 6))
            matroid_m, matroid_n = random_matroid(rng, ground), random_matroid(rng, ground)
            sets = []
            for _ in range(int(rng.integers(1, 5))):
                a = frozenset(np.flatnonzero(rng.random(ground) < 0.5).tolist())
                if matroid_m.is_independent(a) and matroid_n.is_independent(a):
                    sets.append(a)
            inst = make_instance(matroid_m, matroid_n, sets, int(rng.integers(1, 4)))
            with self.subTest(i=i):
                sel = find_rainbow(inst)
                self.assertEqual(sel is None, brute_force_rainbow(inst) is None)
                if sel is not None:
                    self.assertTrue(verify_selection(inst, sel))

    def test_main_theorem_instances(self):
        for seed in range(15):
            try:
                inst = gen_random_instance(2 + seed % 2, ground=5, seed=seed)
            except InfeasibleInstanceError:
                continue
            with self.subTest(seed=seed):
                self.assertTrue(check_degree_hypothesis(inst))
                sel = find_rainbow(inst)
                self.assertIsNotNone(sel)
                self.assertTrue(verify_selection(inst, sel))


class TestMatchability(unittest.TestCase):

    def test_single_vertex(self):
        report = matchability_check(free_matroid(1), SimplicialComplex(1, [{0}]))
        self.assertTrue(report.hypothesis_ok)
        self.assertEqual(report.basis_found, frozenset({0}))
        report = matchability_check(free_matroid(1), SimplicialComplex(1, [set()]))
        self.assertFalse(report.hypothesis_ok)
        self.assertEqual(report.failing_flat, frozenset())
        self.assertIsNone(report.basis_found)

    def test_strict_agrees(self):
        matroid = uniform_matroid(4, 2)
        cplx = SimplicialComplex(4, [{0, 1}, {1, 2}, {2, 3}, {3, 0}])
        loose = matchability_check(matroid, cplx)
        strict = matchability_check(matroid, cplx, strict=True)
        self.assertTrue(loose.hypothesis_ok)
        self.assertTrue(strict.hypothesis_ok)
        self.assertEqual(loose.sets_checked, 6)
        self.assertEqual(strict.sets_checked, 16)
        self.assertIsNotNone(loose.basis_found)

    def test_strict_warns_on_large_ground(self):
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter('always')
            matchability_check(free_matroid(11), SimplicialComplex(11, [range(11)]), strict=True)
        self.assertTrue(any('strict' in str(w.message) for w in caught))

    def test_ground_mismatch(self):
        with self.assertRaises(ValueError):
            matchability_check(free_matroid(2), SimplicialComplex(3, [{0}]))

    def test_void_complex_rejected(self):
        for matroid in (free_matroid(0), free_matroid(2)):
            with self.subTest(rank=matroid.rank()):
                with self.assertRaises(ValueError):
                    matchability_check(matroid, SimplicialComplex(matroid.ground, ()))
        report = matchability_check(free_matroid(0), SimplicialComplex(0, [set()]))
        self.assertTrue(report.hypothesis_ok)
        self.assertEqual(report.basis_found, frozenset())

    def test_layered_drisko(self):
        inst = drisko_n2()
        report, sel = layered_matchability(inst)
        self.assertTrue(report.hypothesis_ok)
        self.assertIsNotNone(sel)
        self.assertTrue(verify_selection(inst, sel))

    def test_layered_cycle(self):
        report, sel = layered_matchability(cycle_n2())
        self.assertFalse(report.hypothesis_ok)
        self.assertIsNone(sel)


class TestLemma(unittest.TestCase):

    def test_single_block(self):
        result = lemma_main_check([{0}], free_matroid(1), 1)
        self.assertTrue(result.applicable)
        self.assertEqual(result.eta, ETA_INF)
        self.assertTrue(result.holds)

    def test_sizes_122(self):
        blocks = [{0}, {1, 2}, {3, 4}]
        # every facet meets the singleton block, so the complex is a cone
        result = lemma_main_check(blocks, free_matroid(5), 2)
        self.assertTrue(result.holds)
        self.assertEqual(result.eta, ETA_INF)
        # rank two: a connected graph with cycles
        result = lemma_main_check(blocks, uniform_matroid(5, 2), 2)
        self.assertTrue(result.applicable)
        self.assertEqual(result.indices, (0, 1, 2))
        self.assertEqual(result.eta, 2)
        self.assertTrue(result.holds)

    def test_circuit_across_blocks(self):
        blocks = [{0}, {1, 2}, {3, 4}]
        matroid = from_circuits(5, [{1, 3}])
        result = lemma_main_check(blocks, matroid, 2)
        self.assertTrue(result.applicable)
        self.assertGreaterEqual(result.eta, 2)

    def test_inapplicable(self):
        result = lemma_main_check([{0}, {1}], free_matroid(2), 2)
        self.assertFalse(result.applicable)
        result = lemma_main_check([{0}, {1}, {2}], free_matroid(3), 2)
        self.assertFalse(result.applicable)
        result = lemma_main_check([{0}, {1, 2}, {3, 4}], free_matroid(5), 2, indices=[1, 0, 2])
        self.assertFalse(result.applicable)
        with self.assertRaises(ValueError):
            lemma_main_check([{0}, {1, 2}, {3, 4}], free_matroid(5), 2, indices=[0, 0, 2])

    def test_indices(self):
        blocks = [{0, 1}, {2}, {3, 4}]
        self.assertEqual(find_lemma_indices(blocks, free_matroid(5), 2), [1, 0, 2])
        self.assertIsNone(find_lemma_indices(blocks, free_matroid(5), 3))

    def test_hypergraph(self):
        h = lemma_hypergraph([{0}, {1, 2}], uniform_matroid(3, 2))
        self.assertIn(frozenset({1, 2}), h.edges)
        self.assertIn(frozenset({0, 1, 2}), h.edges)


class TestProofSteps(unittest.TestCase):

    def test_drisko(self):
        steps = proof_step_report(drisko_n2())
        self.assertEqual(list(steps.columns), ['flat', 'rank', 'bound', 'rho_quotient', 'eta_restricted',
                                               'correspondence', 'rank_shift', 'lemma_applicable', 'lemma_eta'])
        self.assertTrue(steps['correspondence'].all())
        self.assertTrue(steps['rank_shift'].all())
        self.assertTrue((steps['rho_quotient'] <= steps['bound']).all())
        self.assertTrue((steps['eta_restricted'] >= steps['bound']).all())
        self.assertEqual(steps['rank'].iloc[0], 0)
        self.assertEqual(steps['rank'].max(), 2)
        applicable = steps[steps['lemma_applicable']]
        self.assertTrue((applicable['lemma_eta'] == applicable['eta_restricted']).all())


if __name__ == '__main__':
    unittest.main()
