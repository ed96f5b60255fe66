import unittest

from tin_common.errors import CapExceededError, PreconditionError
from tin_common.graph import Graph
from tin_generators.canonical import canonical_form, canonical_graph, is_isomorphic, refine
from tin_generators.enumeration import enumerate_graphs, enumerate_levels, free_predicate
from tin_generators.named import (comb, complete, cycle, line_graph_of_subdivided_star, named, one_subdivision,
                                  path, pyramid_fan, star, subdivided_star, t_pyramid)
from tin_generators.planted import lemma44_witness, planted_pyramid, planted_structures
from tin_generators.sampler import GeneratorSpec, largest_component, random_gnp, sample_free
from tin_patterns.paths import is_free
from tin_patterns.structures import StructureTag


def shuffled(G, order):
    return Graph(G.n, [(order[u], order[v]) for u, v in G.edges()])


class NamedTest(unittest.TestCase):

    def test_sizes(self):
        self.assertEqual((t_pyramid(3).n, t_pyramid(3).edge_count), (7, 9))
        self.assertEqual((t_pyramid(4).n, t_pyramid(4).edge_count), (9, 14))
        self.assertEqual((comb(3).n, comb(3).edge_count), (6, 5))
        self.assertEqual((pyramid_fan(4).n, pyramid_fan(4).edge_count), (10, 18))
        self.assertEqual(star(3).edges(), [(0, 1), (0, 2), (0, 3)])

    def test_subdivisions(self):
        G = one_subdivision(star(3))
        self.assertEqual((G.n, G.edge_count), (7, 6))
        self.assertEqual(G, subdivided_star(3))
        self.assertEqual(one_subdivision(cycle(3)).edge_count, 6)

    def test_line_graph_is_clique_with_pendants(self):
        expected = Graph(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)])
        self.assertTrue(is_isomorphic(line_graph_of_subdivided_star(3), expected))

    def test_wrapped_constructions(self):
        self.assertEqual(named("one_subdivision", of={"name": "star", "k": 3}), subdivided_star(3))
        self.assertEqual(named("line_graph", of=star(3)), complete(3))
        self.assertTrue(is_isomorphic(named("line_graph", of={"name": "cycle", "n": 5}), cycle(5)))
        spec = GeneratorSpec.from_json('{"kind": "Named", "params": {"name": "line_graph", '
                                       '"of": {"name": "path", "n": 4}}}')
        self.assertEqual(spec.generate(), [path(3)])
        with self.assertRaises(PreconditionError):
            named("line_graph")
        with self.assertRaises(PreconditionError):
            named("one_subdivision", of={"name": "cycle", "n": 4}, k=2)
        with self.assertRaises(PreconditionError):
            named("line_graph", of={"name": "petersen"})

    def test_by_name(self):
        self.assertEqual(named("cycle", n=5), cycle(5))
        with self.assertRaises(PreconditionError):
            named("petersen")
        with self.assertRaises(PreconditionError):
            named("cycle", k=5)
        with self.assertRaises(PreconditionError):
            cycle(2)
        with self.assertRaises(PreconditionError):
            t_pyramid(1)


class PlantedTest(unittest.TestCase):

    def test_structure_layout(self):
        planted = planted_structures(StructureTag.ONE_SUBDIVIDED_STAR, StructureTag.STAR, 3)
        self.assertEqual(planted.separator, frozenset({0, 1, 2}))
        self.assertEqual(planted.first, frozenset(range(3, 7)))
        self.assertEqual(planted.second, frozenset({7}))
        self.assertEqual(planted.graph.n, 8)
        with self.assertRaises(PreconditionError):
            planted_structures(StructureTag.STAR, StructureTag.STAR, 2)

    def test_lemma44_witness(self):
        planted = lemma44_witness(4)
        self.assertEqual(planted.graph.n, 9)
        self.assertEqual(planted.second, frozenset({5, 6, 7, 8}))

    def test_planted_pyramid(self):
        G, p = planted_pyramid(basic=2, apex_side=1, attachments=1)
        self.assertEqual(G.n, 11)
        self.assertEqual(G.adj(7), frozenset(p.base))
        self.assertEqual(G.adj(9), frozenset({0}))
        self.assertEqual(G.adj(10), frozenset({1, 2}))


class SamplerTest(unittest.TestCase):

    def test_edge_cases(self):
        self.assertEqual(sample_free(1, 2, 0.5).n, 1)
        G = sample_free(10, 2, 0.0, seed=3)
        self.assertEqual((G.n, G.edge_count), (10, 0))
        with self.assertRaises(PreconditionError):
            sample_free(0, 2, 0.5)
        with self.assertRaises(PreconditionError):
            sample_free(5, 1, 0.5)
        with self.assertRaises(PreconditionError):
            random_gnp(5, 1.5)

    def test_result_is_free_and_seeded(self):
        for seed in range(5):
            G = sample_free(30, 2, 0.2, seed)
            self.assertTrue(is_free(G, 2))
            self.assertEqual(G, sample_free(30, 2, 0.2, seed))
            self.assertEqual(len(G.labels), G.n)
        self.assertTrue(is_free(sample_free(25, 3, 0.3, 1, r=5), 3, 5))

    def test_largest_component(self):
        H = largest_component(Graph(5, [(0, 1), (2, 3), (3, 4)]))
        self.assertEqual(H.labels, (2, 3, 4))
        self.assertEqual(largest_component(Graph(0)).n, 0)


class GeneratorSpecTest(unittest.TestCase):

    def test_named(self):
        spec = GeneratorSpec.from_json('{"kind": "Named", "params": {"name": "t_pyramid", "t": 3}}')
        self.assertEqual(spec.generate(), [t_pyramid(3)])
        self.assertEqual(spec.to_dict(), {"kind": "Named", "params": {"name": "t_pyramid", "t": 3}, "seed": 0})

    def test_other_kinds(self):
        self.assertEqual(len(GeneratorSpec("Enumerate", {"n": 3}).generate()), 4)
        self.assertEqual(GeneratorSpec("Planted", {"basic": 1}).generate()[0].n, 9)
        free = GeneratorSpec("FreeRepair", {"n": 20, "t": 2, "p": 0.3}, seed=7).generate()[0]
        self.assertTrue(is_free(free, 2))
        gnp = GeneratorSpec("RandomGnp", {"n": 12, "p": 0.5}, seed=2).generate()[0]
        self.assertEqual(gnp, random_gnp(12, 0.5, 2))

    def test_errors(self):
        with self.assertRaises(PreconditionError):
            GeneratorSpec("Mystery")
        with self.assertRaises(PreconditionError):
            GeneratorSpec.from_json("{not json")
        with self.assertRaises(PreconditionError):
            GeneratorSpec.from_json('{"params": {}}')
        with self.assertRaises(PreconditionError):
            GeneratorSpec("RandomGnp", {"n": 4}).generate()


class CanonicalTest(unittest.TestCase):

    def test_relabelled_graphs_agree(self):
        G = t_pyramid(3)
        H = shuffled(G, [6, 2, 0, 5, 1, 3, 4])
        self.assertEqual(canonical_form(G), canonical_form(H))
        self.assertEqual(canonical_graph(G), canonical_graph(H))
        self.assertTrue(is_isomorphic(G, H))

    def test_distinguishes(self):
        self.assertFalse(is_isomorphic(path(4), star(3)))
        self.assertFalse(is_isomorphic(cycle(6), Graph(6, cycle(3).edges() + [(3, 4), (4, 5), (3, 5)])))
        self.assertFalse(is_isomorphic(complete(3), path(4)))

    def test_refine_is_stable(self):
        colors = refine(path(5), [0] * 5)
        self.assertEqual(colors[0], colors[4])
        self.assertEqual(colors[1], colors[3])
        self.assertNotEqual(colors[0], colors[2])


class EnumerationTest(unittest.TestCase):

    def test_all_graphs(self):
        counts = [len(level) for level in enumerate_levels(6)]
        self.assertEqual(counts, [1, 2, 4, 11, 34, 156])

    def test_free_graphs(self):
        counts = [len(level) for level in enumerate_levels(5, free_predicate(2))]
        # C4 is the only 4-vertex graph with an induced K2,2
        self.assertEqual(counts[:4], [1, 2, 4, 10])
        for level in enumerate_levels(5, free_predicate(2)):
            for G in level:
                self.assertTrue(is_free(G, 2))

    def test_representatives_are_distinct(self):
        graphs = list(enumerate_graphs(5))
        self.assertEqual(len({canonical_form(G) for G in graphs}), len(graphs))

    def test_bounds(self):
        with self.assertRaises(CapExceededError):
            list(enumerate_levels(10))
        with self.assertRaises(PreconditionError):
            list(enumerate_levels(0))


if __name__ == "__main__":
    unittest.main()
