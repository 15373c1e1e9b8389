"""
created matt_dumont
on: 17/10/26
"""
import unittest
from itertools import combinations
from komanawa.rainbow_tools.matroids import (MatroidAxiomError, ScaleLimitError, ProjectionMatroid, bases,
                                             check_circuit_elimination, check_matroid_axioms, circuits, closure,
                                             closure_and_flats, coloops, contract, delete, explicit_matroid, flats,
                                             free_matroid, from_circuits, graphic_matroid, independent_sets,
                                             is_independent, linear_matroid, loops, matroid_rank, matroid_to_spec,
                                             partition_matroid, quotient_to, rank, restrict, same_matroid, shortlex,
                                             truncate, uniform_matroid)


def fs(*sets):
    return [frozenset(s) for s in sets]


def triangle():
    return graphic_matroid(3, [(0, 1), (1, 2), (0, 2)])


def four_cycle():
    return graphic_matroid(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


class TestRealizations(unittest.TestCase):

    def test_uniform(self):
        m = uniform_matroid(3, 2)
        self.assertEqual(rank(m, {0, 1, 2}), 2)
        self.assertEqual(rank(m, set()), 0)
        self.assertEqual(circuits(m), fs({0, 1, 2}))
        self.assertEqual(circuits(uniform_matroid(3, 3)), [])
        self.assertTrue(same_matroid(uniform_matroid(3, 3), free_matroid(3)))
        with self.assertRaises(ValueError):
            uniform_matroid(2, 3)

    def test_partition(self):
        self.assertEqual(circuits(partition_matroid([{0, 1}, {2}])), fs({0, 1}))
        self.assertTrue(same_matroid(partition_matroid([{0}, {1}, {2}]), free_matroid(3)))
        m = partition_matroid([{0, 1}, {2, 3}], ground=5)
        self.assertEqual(loops(m), frozenset({4}))
        self.assertEqual(matroid_rank(m), 2)
        self.assertEqual(circuits(partition_matroid([{0, 1}, {2, 3}])), fs({0, 1}, {2, 3}))
        with self.assertRaises(ValueError) as ctx:
            partition_matroid([{0, 1}, {1, 2}])
        self.assertIn('{0 1}', str(ctx.exception))
        self.assertIn('{1 2}', str(ctx.exception))

    def test_graphic(self):
        m = triangle()
        self.assertEqual(circuits(m), fs({0, 1, 2}))
        self.assertEqual(matroid_rank(m), 2)
        loop = graphic_matroid(2, [(0, 0), (0, 1)])
        self.assertEqual(loops(loop), frozenset({0}))
        m = four_cycle()
        self.assertEqual(rank(m), 3)
        self.assertEqual(circuits(m), fs({0, 1, 2, 3}))
        parallel = graphic_matroid(2, [(0, 1), (1, 0)])
        self.assertEqual(circuits(parallel), fs({0, 1}))
        with self.assertRaises(ValueError):
            graphic_matroid(2, [(0, 2)])

    def test_linear(self):
        self.assertEqual(circuits(linear_matroid(2, [(1, 0), (0, 1), (1, 1)])), fs({0, 1, 2}))
        self.assertEqual(loops(linear_matroid(2, [(0, 0)])), frozenset({0}))
        self.assertEqual(circuits(linear_matroid(3, [(1, 0), (2, 0)])), fs({0, 1}))
        self.assertEqual(circuits(linear_matroid(2, [(1, 0), (0, 1), (1, 1), (1, 0)])),
                         fs({0, 3}, {0, 1, 2}, {1, 2, 3}))
        with self.assertRaises(ValueError):
            linear_matroid(4, [(1, 0)])
        with self.assertRaises(ValueError):
            linear_matroid(2, [(1, 0), (1,)])

    def test_from_circuits(self):
        self.assertTrue(same_matroid(from_circuits(3, [{0, 1, 2}]), uniform_matroid(3, 2)))
        m = from_circuits(3, [{0}, {1, 2}])
        self.assertEqual(loops(m), frozenset({0}))
        m = from_circuits(4, [{0, 1}, {0, 2}, {1, 2}])
        self.assertEqual(circuits(m), fs({0, 1}, {0, 2}, {1, 2}))
        with self.assertRaises(MatroidAxiomError) as ctx:
            from_circuits(3, [{0, 1}, {0, 1, 2}])
        self.assertEqual(ctx.exception.axiom, 'antichain')
        with self.assertRaises(MatroidAxiomError) as ctx:
            from_circuits(4, [{0, 1}, {0, 2}])
        self.assertEqual(ctx.exception.axiom, 'elimination')
        c1, c2, x = ctx.exception.witness
        self.assertIn(x, c1 & c2)
        self.assertIsNotNone(check_circuit_elimination([{0, 1}, {0, 2}]))
        with self.assertRaises(MatroidAxiomError) as ctx:
            from_circuits(2, [set()])
        self.assertEqual(ctx.exception.axiom, 'empty')

    def test_explicit(self):
        family = fs(set(), {0}, {1}, {0, 1})
        self.assertTrue(check_matroid_axioms(2, family).ok)
        self.assertTrue(same_matroid(explicit_matroid(2, family), free_matroid(2)))
        result = check_matroid_axioms(2, fs(set(), {0, 1}))
        self.assertFalse(result.ok)
        self.assertEqual(result.axiom, 'downward')
        self.assertEqual(result.witness, (frozenset({0, 1}), frozenset({0})))
        result = check_matroid_axioms(3, fs(set(), {0}, {1}, {2}, {0, 1}))
        self.assertEqual(result.axiom, 'exchange')
        self.assertEqual(result.witness, (frozenset({2}), frozenset({0, 1})))
        self.assertEqual(check_matroid_axioms(2, fs({0})).axiom, 'empty')
        with self.assertRaises(MatroidAxiomError):
            explicit_matroid(2, fs(set(), {0, 1}))
        with self.assertRaises(ScaleLimitError):
            check_matroid_axioms(17, fs(set()))


class TestOperations(unittest.TestCase):

    def test_flats(self):
        self.assertEqual(flats(free_matroid(2)), fs(set(), {0}, {1}, {0, 1}))
        self.assertEqual(flats(uniform_matroid(3, 2)), fs(set(), {0}, {1}, {2}, {0, 1, 2}))
        m = from_circuits(3, [{0}])
        for f in flats(m):
            self.assertIn(0, f)
        self.assertEqual(closure_and_flats(uniform_matroid(2, 1)), [(frozenset(), 0), (frozenset({0, 1}), 1)])
        self.assertEqual(closure(uniform_matroid(3, 2), {0, 1}), frozenset({0, 1, 2}))

    def test_contract(self):
        m = uniform_matroid(3, 2)
        self.assertTrue(same_matroid(contract(m, set()), m))
        c = contract(m, {0})
        self.assertEqual(c.ground, frozenset({1, 2}))
        self.assertEqual(rank(c), 1)
        self.assertEqual(circuits(c), fs({1, 2}))
        self.assertEqual(circuits(contract(four_cycle(), {0})), fs({1, 2, 3}))

    def test_restrict_delete(self):
        m = uniform_matroid(3, 2)
        self.assertTrue(same_matroid(restrict(m, m.ground), m))
        self.assertEqual(circuits(restrict(m, {0, 1})), [])
        self.assertEqual(circuits(restrict(triangle(), {0, 1})), [])
        self.assertEqual(delete(m, {2}).ground, frozenset({0, 1}))

    def test_truncate(self):
        self.assertTrue(same_matroid(truncate(free_matroid(3), 2), uniform_matroid(3, 2)))
        m = four_cycle()
        self.assertTrue(same_matroid(truncate(m, rank(m)), m))
        t = truncate(m, 2)
        self.assertEqual(rank(t), 2)
        self.assertEqual(circuits(t), [frozenset(c) for c in combinations(range(4), 3)])

    def test_quotient(self):
        self.assertTrue(same_matroid(quotient_to(free_matroid(3), {0, 1}), free_matroid(2)))
        q = quotient_to(triangle(), {0})
        self.assertEqual(loops(q), frozenset({0}))
        m = four_cycle()
        self.assertTrue(same_matroid(quotient_to(m, m.ground), m))

    def test_quotient_for_all_definition(self):
        realizations = [four_cycle(), triangle(), uniform_matroid(4, 2), partition_matroid([{0, 1}, {2, 3}]),
                        linear_matroid(2, [(1, 0), (0, 1), (1, 1), (1, 0)])]
        for m in realizations:
            elements = sorted(m.ground)
            for size in range(len(elements) + 1):
                for s in combinations(elements, size):
                    s = frozenset(s)
                    q = quotient_to(m, s)
                    outside = independent_sets(m, within=m.ground - s)
                    for e in independent_sets(free_matroid(len(elements)), within=s):
                        expect = all(is_independent(m, e | f) for f in outside)
                        with self.subTest(m=m, s=s, e=e):
                            self.assertEqual(q.is_independent(e), expect)

    def test_rank_axioms(self):
        for m in [four_cycle(), uniform_matroid(5, 3), partition_matroid([{0, 1}, {2, 3, 4}]),
                  linear_matroid(3, [(1, 0), (2, 0), (0, 1), (1, 1), (0, 0)]), from_circuits(4, [{0, 1}, {2}])]:
            subsets = [frozenset(c) for size in range(len(m.ground) + 1) for c in combinations(sorted(m.ground), size)]
            self.assertEqual(rank(m, set()), 0)
            for s in subsets:
                for t in subsets:
                    with self.subTest(m=m, s=s, t=t):
                        self.assertLessEqual(rank(m, s | t) + rank(m, s & t), rank(m, s) + rank(m, t))
                for x in m.ground - s:
                    self.assertIn(rank(m, s | {x}) - rank(m, s), (0, 1))

    def test_loops_coloops(self):
        m = from_circuits(4, [{0}, {1, 2}])
        cs = circuits(m)
        self.assertEqual(loops(m), frozenset(x for x in m.ground if frozenset({x}) in cs))
        self.assertEqual(coloops(m), frozenset(x for x in m.ground if not any(x in c for c in cs)))
        self.assertEqual(coloops(m), frozenset({3}))

    def test_bases(self):
        self.assertEqual(bases(uniform_matroid(3, 2)), fs({0, 1}, {0, 2}, {1, 2}))

    def test_projection(self):
        m = ProjectionMatroid(uniform_matroid(3, 1), [0, 1, 0])
        self.assertEqual(rank(m), 1)
        self.assertFalse(m.is_independent({0, 2}))
        free = ProjectionMatroid(free_matroid(2), [0, 1, 0, 1])
        self.assertEqual(circuits(free), fs({0, 2}, {1, 3}))
        self.assertTrue(check_matroid_axioms(free.ground, independent_sets(free)).ok)

    def test_shortlex(self):
        self.assertEqual(shortlex([{1, 2}, {0}, {0, 3}, set()]), fs(set(), {0}, {0, 3}, {1, 2}))

    def test_matroid_to_spec(self):
        self.assertEqual(matroid_to_spec(uniform_matroid(4, 2)), 'uniform 2')
        self.assertEqual(matroid_to_spec(partition_matroid([{0, 1}, {2, 3}])), 'partition 0,1|2,3')
        self.assertEqual(matroid_to_spec(triangle()), 'graphic 3 0-1,1-2,0-2')
        self.assertEqual(matroid_to_spec(linear_matroid(2, [(1, 0), (0, 1)])), 'linear 2 1,0;0,1')
        self.assertEqual(matroid_to_spec(from_circuits(3, [{0, 1, 2}])), 'circuits { 0 1 2 }')
        self.assertEqual(matroid_to_spec(contract(uniform_matroid(3, 2), set())), 'circuits { 0 1 2 }')
        with self.assertRaises(ValueError):
            matroid_to_spec(contract(uniform_matroid(3, 2), {0}))


if __name__ == '__main__':
    unittest.main()
