import unittest
from fractions import Fraction
from itertools import combinations

import networkx as nx

from tin_common.errors import CapExceededError, PreconditionError
from tin_common.graph import Graph
from tin_common.weighting import Weighting, is_balanced_separator
from tin_decomposition.builder import (build_from_balanced_separators, oracle_by_name, trivial_oracle,
                                       width_guarantee)
from tin_decomposition.exact import (decomposition_from_ordering, elimination_bags, exact_tree_independence,
                                     exact_treewidth, optimal_elimination)
from tin_decomposition.heuristics import balanced_bag, candidate_decompositions, heuristic_decompositions
from tin_decomposition.tree_decomposition import (TreeDecomposition, alpha_width, compress, single_bag,
                                                  validate, width)
from tin_generators.enumeration import enumerate_levels
from tin_generators.named import complete, complete_bipartite, cycle, path, star
from tin_generators.sampler import largest_component, random_gnp, sample_free
from tin_lemmas.bounds import BoundConfig


def subset_alpha(G, vs):
    vs = sorted(vs)
    for size in range(len(vs), 0, -1):
        for chosen in combinations(vs, size):
            if not any(G.has_edge(u, v) for u, v in combinations(chosen, 2)):
                return size
    return 0


def tin_over_triangulations(G):
    """Smallest largest-bag alpha over the clique trees of every chordal supergraph of G."""
    missing = [(u, v) for u, v in combinations(range(G.n), 2) if not G.has_edge(u, v)]
    best = None
    for mask in range(1 << len(missing)):
        H = G.nx_graph.copy()
        H.add_edges_from(e for i, e in enumerate(missing) if mask >> i & 1)
        if not nx.is_chordal(H):
            continue
        worst = max(subset_alpha(G, clique) for clique in nx.find_cliques(H))
        best = worst if best is None else min(best, worst)
    return best


class ValidateTest(unittest.TestCase):

    def test_single_bag(self):
        D = single_bag(cycle(4))
        self.assertEqual(validate(D), (True, None))
        self.assertEqual(alpha_width(D), 2)
        self.assertEqual(width(D), 3)

    def test_axioms(self):
        G = path(3)
        cases = [
            ({0: {0, 1}, 1: {1, 2}, 2: {0}}, [(0, 1), (1, 2), (0, 2)], "tree"),
            ({0: {0, 1}}, [], "vertex-coverage"),
            ({0: {0, 1}, 1: {2}}, [(0, 1)], "edge-coverage"),
            ({0: {0, 1}, 1: {1, 2}, 2: {0}}, [(0, 1), (1, 2)], "subtree"),
        ]
        for bags, edges, axiom in cases:
            D = TreeDecomposition.build(G, bags, edges)
            self.assertEqual(validate(D), (False, axiom))
        with self.assertRaises(PreconditionError):
            alpha_width(TreeDecomposition.build(G, {0: {0, 1}}, []))

    def test_compress_keeps_validity(self):
        D = TreeDecomposition.build(path(3), {0: {0, 1}, 1: {1}, 2: {1, 2}}, [(0, 1), (1, 2)])
        small = compress(D)
        self.assertEqual(small.bag_count, 2)
        self.assertTrue(validate(small)[0])

    def test_json(self):
        D = decomposition_from_ordering(cycle(5), [0, 1, 2, 3, 4])
        again = TreeDecomposition.from_json(D.host, D.to_json())
        self.assertEqual(again.bags, D.bags)
        self.assertEqual(again.edges, D.edges)
        with self.assertRaises(PreconditionError):
            TreeDecomposition.from_json(D.host, {"bags": {}})


class ExactTest(unittest.TestCase):

    def test_cycles(self):
        for n in range(4, 9):
            self.assertEqual(exact_tree_independence(cycle(n)), 2)
        self.assertEqual(exact_treewidth(cycle(4)), 2)

    def test_chordal_graphs(self):
        self.assertEqual(exact_tree_independence(path(6)), 1)
        self.assertEqual(exact_tree_independence(complete(5)), 1)
        self.assertEqual(exact_treewidth(complete(5)), 4)
        self.assertEqual(exact_treewidth(path(6)), 1)

    def test_small_graphs(self):
        self.assertEqual(optimal_elimination(Graph(0)), (0, []))
        self.assertEqual(exact_treewidth(Graph(0)), -1)
        self.assertEqual(exact_tree_independence(Graph(3)), 1)
        self.assertEqual(exact_treewidth(Graph(3)), 0)
        self.assertEqual(exact_tree_independence(complete_bipartite(2, 3)), 2)

    def test_agrees_with_triangulation_search(self):
        for level in enumerate_levels(5):
            for G in level:
                self.assertEqual(exact_tree_independence(G), tin_over_triangulations(G), G.edges())

    def test_agrees_with_chordality(self):
        for seed in range(20):
            G = random_gnp(7, 0.4, seed)
            self.assertEqual(exact_tree_independence(G) <= 1, nx.is_chordal(G.nx_graph), seed)

    def test_ordering_attains_the_value(self):
        for seed in range(10):
            G = random_gnp(8, 0.35, seed)
            value, ordering = optimal_elimination(G)
            D = decomposition_from_ordering(G, ordering)
            self.assertTrue(validate(D)[0])
            self.assertEqual(alpha_width(D), value)
            tw, ordering = optimal_elimination(G, "width")
            self.assertEqual(width(decomposition_from_ordering(G, ordering)), tw)

    def test_cap(self):
        with self.assertRaises(CapExceededError):
            exact_tree_independence(path(13))
        self.assertEqual(exact_tree_independence(path(13), cap=13), 1)
        with self.assertRaises(PreconditionError):
            optimal_elimination(path(3), "depth")

    def test_elimination_bags(self):
        self.assertEqual(elimination_bags(cycle(4), [0, 1, 2, 3])[0], frozenset({0, 1, 3}))
        with self.assertRaises(PreconditionError):
            elimination_bags(cycle(4), [0, 1, 2])


class HeuristicsTest(unittest.TestCase):

    def test_heuristics_are_valid(self):
        G = random_gnp(15, 0.3, 4)
        for D in heuristic_decompositions(G):
            self.assertTrue(validate(D)[0])
        self.assertEqual(len(candidate_decompositions(cycle(6))), 3)
        self.assertEqual(len(candidate_decompositions(cycle(20))), 2)

    def test_balanced_bag(self):
        G = path(9)
        w = Weighting.uniform(9)
        bag = balanced_bag(G, candidate_decompositions(G), w)
        self.assertTrue(is_balanced_separator(G, bag, w, Fraction(1, 2)))
        self.assertIsNone(balanced_bag(G, [], w))


class BuilderTest(unittest.TestCase):

    def setUp(self):
        self.cfg = BoundConfig(t=2)

    def test_complete_graph_is_one_bag(self):
        oracle, c = oracle_by_name("neighborhood", self.cfg)
        D = build_from_balanced_separators(complete(5), oracle, c)
        self.assertEqual(D.bag_count, 1)
        self.assertEqual(alpha_width(D), 1)

    def test_valid_for_every_oracle(self):
        graphs = [cycle(5), cycle(6), star(4), complete(4), Graph(4, [(0, 1)])]
        for name in ("trivial", "neighborhood", "lemma33"):
            oracle, c = oracle_by_name(name, self.cfg)
            for G in graphs:
                D = build_from_balanced_separators(G, oracle, c)
                self.assertEqual(validate(D), (True, None), (name, G))

    def test_lemma_oracles_on_larger_graphs(self):
        relaxed = BoundConfig(t=2, assert_mode=False)
        for name in ("neighborhood", "lemma33"):
            oracle, c = oracle_by_name(name, relaxed)
            for G in (cycle(9), path(12)):
                D = build_from_balanced_separators(G, oracle, c)
                self.assertEqual(validate(D), (True, None), (name, G.n))
            oracle, c = oracle_by_name(name, self.cfg)
            for seed in range(5):
                G = sample_free(14, 2, 0.25, seed)
                for H in (G, largest_component(G)):
                    D = build_from_balanced_separators(H, oracle, c)
                    self.assertEqual(validate(D), (True, None), (name, seed))
                    self.assertLessEqual(alpha_width(D), max(1, H.n - 1))

    def test_any_oracle_output_gives_a_valid_tree(self):
        def careless(G, w):
            return []

        D = build_from_balanced_separators(cycle(7), careless)
        self.assertTrue(validate(D)[0])

    def test_empty_graph(self):
        self.assertEqual(build_from_balanced_separators(Graph(0), trivial_oracle()).bag_count, 1)

    def test_depth_cap(self):
        with self.assertRaises(CapExceededError):
            build_from_balanced_separators(path(6), trivial_oracle(), max_depth=0)

    def test_guarantee(self):
        self.assertEqual(width_guarantee(Fraction(7, 8), 2), 36)
        with self.assertRaises(PreconditionError):
            oracle_by_name("magic", self.cfg)


if __name__ == "__main__":
    unittest.main()
