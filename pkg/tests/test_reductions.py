"""
created matt_dumont
on: 17/10/26
"""
import unittest
from itertools import combinations, product
import numpy as np
from komanawa.rainbow_tools.matroids import circuits, free_matroid, uniform_matroid, graphic_matroid
from komanawa.rainbow_tools.rainbow import (InstanceValidationError, find_rainbow, brute_force_rainbow,
                                            verify_selection)
from komanawa.rainbow_tools.reductions import (BipartiteGraph, Diagonal, bipartite_to_matroid_pair, is_matching,
                                               matchings_to_instance, complete_bipartite_graph, check_drisko_matrix,
                                               drisko_matrix_to_matchings, drisko_instance,
                                               chappell_matrix_to_instance, selection_to_diagonal,
                                               gen_cycle_tightness, gen_complete_bipartite_example)

drisko_n2_matrix = [[1, 1, 2], [2, 2, 1]]


class TestBipartite(unittest.TestCase):

    def test_graph(self):
        graph = complete_bipartite_graph(2)
        self.assertEqual(graph.edges, ((0, 0), (0, 1), (1, 0), (1, 1)))
        self.assertEqual(graph.edge_count, 4)
        with self.assertRaises(ValueError):
            BipartiteGraph(2, 2, ((0, 2),))

    def test_matroid_pair(self):
        graph = complete_bipartite_graph(2)
        matroid_a, matroid_b = bipartite_to_matroid_pair(graph)
        self.assertEqual(circuits(matroid_a), [frozenset({0, 1}), frozenset({2, 3})])
        self.assertEqual(circuits(matroid_b), [frozenset({0, 2}), frozenset({1, 3})])
        # matchings are exactly the sets independent in both
        for size in range(5):
            for edges in combinations(range(4), size):
                edges = frozenset(edges)
                with self.subTest(edges=edges):
                    both = matroid_a.is_independent(edges) and matroid_b.is_independent(edges)
                    self.assertEqual(both, is_matching(graph, edges))

    def test_parallel_edges(self):
        graph = BipartiteGraph(1, 1, ((0, 0), (0, 0)))
        matroid_a, _ = bipartite_to_matroid_pair(graph)
        self.assertEqual(circuits(matroid_a), [frozenset({0, 1})])
        self.assertFalse(is_matching(graph, {0, 1}))
        self.assertFalse(is_matching(graph, {4}))

    def test_matchings_to_instance(self):
        graph, matchings = gen_cycle_tightness(2)
        inst = matchings_to_instance(graph, matchings, 2)
        self.assertEqual(inst.sets, (frozenset({0, 2}), frozenset({1, 3})))
        self.assertIsNone(find_rainbow(inst))
        with self.assertRaises(ValueError):
            matchings_to_instance(graph, [{0, 3}], 1)


class TestDrisko(unittest.TestCase):

    def test_check_matrix(self):
        self.assertEqual(check_drisko_matrix(drisko_n2_matrix).shape, (2, 3))
        with self.assertRaises(ValueError) as ctx:
            check_drisko_matrix([[1, 1], [1, 2]])
        self.assertIn('column 1', str(ctx.exception))
        with self.assertRaises(ValueError):
            check_drisko_matrix(np.zeros((0, 3)))

    def test_matchings(self):
        self.assertEqual(drisko_matrix_to_matchings(drisko_n2_matrix),
                         [frozenset({0, 3}), frozenset({0, 3}), frozenset({1, 2})])

    def test_n2(self):
        inst = drisko_instance(drisko_n2_matrix)
        sel = find_rainbow(inst)
        self.assertEqual(str(sel), '(0 1) (3 2)')
        diagonal = selection_to_diagonal(sel, drisko_n2_matrix)
        self.assertEqual(diagonal, Diagonal(((1, 1), (2, 2)), (1, 2)))
        self.assertEqual(len(diagonal), 2)

    def test_all_n2_matrices(self):
        columns = [(1, 2), (2, 1)]
        for choice in product(columns, repeat=3):
            matrix = np.array(choice).T
            with self.subTest(matrix=matrix.tolist()):
                inst = drisko_instance(matrix)
                sel = find_rainbow(inst)
                self.assertIsNotNone(sel)
                diagonal = selection_to_diagonal(sel, matrix)
                self.assertEqual(sorted(diagonal.entries), [1, 2])
                self.assertEqual(len({r for r, _ in diagonal.cells}), 2)

    def test_random_n3(self):
        rng = np.random.default_rng(9)
        for i in range(10):
            matrix = np.array([rng.permutation(3) + 1 for _ in range(5)]).T
            with self.subTest(i=i, matrix=matrix.tolist()):
                sel = find_rainbow(drisko_instance(matrix))
                self.assertIsNotNone(sel)
                self.assertEqual(sorted(selection_to_diagonal(sel, matrix).entries), [1, 2, 3])

    def test_too_few_columns(self):
        # the two Latin columns of order 2 have no diagonal of distinct values
        matrix = [[1, 2], [2, 1]]
        self.assertIsNone(find_rainbow(drisko_instance(matrix)))


class TestChappell(unittest.TestCase):

    def test_free(self):
        matrix = [[0, 1, 0], [1, 0, 1]]
        inst = chappell_matrix_to_instance(matrix, free_matroid(2))
        self.assertEqual(inst.sets, (frozenset({0, 3}), frozenset({1, 2}), frozenset({0, 3})))
        sel = find_rainbow(inst)
        self.assertEqual(str(sel), '(0 1) (3 3)')
        diagonal = selection_to_diagonal(sel, matrix, kind='chappell')
        self.assertEqual(diagonal, Diagonal(((1, 1), (2, 3)), (0, 1)))
        self.assertEqual(brute_force_rainbow(inst) is None, sel is None)

    def test_graphic(self):
        triangle = graphic_matroid(3, [(0, 1), (1, 2), (0, 2)])
        matrix = [[0, 0, 1], [1, 2, 2]]
        inst = chappell_matrix_to_instance(matrix, triangle)
        sel = find_rainbow(inst)
        self.assertIsNotNone(sel)
        self.assertTrue(verify_selection(inst, sel))
        diagonal = selection_to_diagonal(sel, matrix, kind='chappell')
        self.assertTrue(triangle.is_independent(diagonal.entries))
        self.assertEqual(len(set(diagonal.entries)), 2)

    def test_dependent_column(self):
        with self.assertRaises(InstanceValidationError) as ctx:
            chappell_matrix_to_instance([[0], [1]], uniform_matroid(3, 1))
        self.assertEqual(ctx.exception.bad_sets, [(1, 'M')])

    def test_errors(self):
        with self.assertRaises(ValueError):
            chappell_matrix_to_instance([[0, 5]], free_matroid(2))
        with self.assertRaises(ValueError):
            chappell_matrix_to_instance([[0], [1]], free_matroid(2), n=3)
        with self.assertRaises(ValueError):
            selection_to_diagonal(find_rainbow(drisko_instance(drisko_n2_matrix)), drisko_n2_matrix, kind='other')


class TestTightness(unittest.TestCase):

    def test_cycle(self):
        for n in range(2, 6):
            graph, matchings = gen_cycle_tightness(n)
            with self.subTest(n=n):
                self.assertEqual(len(matchings), 2 * n - 2)
                for m in matchings:
                    self.assertTrue(is_matching(graph, m))
                    self.assertEqual(len(m), n)
                inst = matchings_to_instance(graph, matchings, n)
                self.assertIsNone(find_rainbow(inst, max_candidates=inst.candidate_count))

    def test_cycle_extended(self):
        for n in range(2, 5):
            graph, matchings = gen_cycle_tightness(n, extra=1)
            inst = matchings_to_instance(graph, matchings, n)
            with self.subTest(n=n):
                sel = find_rainbow(inst, max_candidates=inst.candidate_count)
                self.assertIsNotNone(sel)
                self.assertEqual(sel.elements, frozenset(range(0, 2 * n, 2)))
        with self.assertRaises(ValueError):
            gen_cycle_tightness(1)

    def test_complete_bipartite(self):
        for n in (2, 4):
            graph, matchings = gen_complete_bipartite_example(n)
            with self.subTest(n=n):
                self.assertEqual(len(matchings), n)
                inst = matchings_to_instance(graph, matchings, n)
                self.assertIsNone(find_rainbow(inst))
        self.assertIsNone(brute_force_rainbow(matchings_to_instance(*gen_complete_bipartite_example(2), 2)))
        with self.assertRaises(ValueError):
            gen_complete_bipartite_example(3)


if __name__ == '__main__':
    unittest.main()
