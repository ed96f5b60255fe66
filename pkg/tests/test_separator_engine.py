import unittest
from dataclasses import replace
from fractions import Fraction

import networkx as nx

from tin_common.errors import CertificateError, LemmaViolation, PreconditionError, violation
from tin_common.graph import Graph, is_ab_separator
from tin_common.weighting import Weighting, is_balanced_separator
from tin_generators.named import complete, cycle, path, pyramid_fan, star
from tin_generators.sampler import largest_component, sample_free
from tin_lemmas.bounds import BoundConfig, apex_base_bound, combined_bound, proven_bound, pyramid_z_bound
from tin_lemmas.certificates import ab_certificate, balanced_certificate, verify_certificate
from tin_lemmas.refutation import conclude, lifted, refute
from tin_lemmas.separator_engine import (lemma33_balanced_separator, neighborhood_balanced_separator,
                                         small_alpha_ab_separator)


class BoundsTest(unittest.TestCase):

    def test_formulas(self):
        self.assertEqual(pyramid_z_bound(3), 24)
        self.assertEqual(apex_base_bound(3), 7)
        self.assertEqual(combined_bound(17, 50), 121)
        self.assertEqual(proven_bound(2, 50), 2057)
        with self.assertRaises(PreconditionError):
            proven_bound(1, 10)

    def test_defaults(self):
        cfg = BoundConfig()
        self.assertEqual(cfg.q, 25)
        self.assertEqual(cfg.g_impl, 50)
        self.assertEqual(cfg.a_bound, 17)
        self.assertEqual(cfg.s_bound, 121)
        self.assertEqual(cfg.pyramid_t, 3)
        self.assertEqual(BoundConfig(t=5).q, 49)

    def test_from_config(self):
        cfg = BoundConfig.from_config({"t": 3, "c": "3/4", "assert_mode": "off", "q": 4})
        self.assertEqual((cfg.t, cfg.c, cfg.assert_mode, cfg.q, cfg.g_impl), (3, Fraction(3, 4), False, 4, 8))
        with self.assertRaises(PreconditionError):
            BoundConfig.from_config({"assert_mode": "maybe"})
        with self.assertRaises(PreconditionError):
            BoundConfig(t=1)
        with self.assertRaises(PreconditionError):
            BoundConfig(c=Fraction(1, 3))


class CertificateTest(unittest.TestCase):

    def test_ab_certificate(self):
        cert = verify_certificate(path(4), ab_certificate(path(4), {2}, 0, 3, bound=1))
        self.assertTrue(cert.verified)
        self.assertEqual(cert.to_dict()["separator"], [2])

    def test_rejections(self):
        G = cycle(4)
        with self.assertRaises(CertificateError):
            verify_certificate(G, ab_certificate(G, {1}, 0, 2))
        good = ab_certificate(G, {1, 3}, 0, 2)
        with self.assertRaises(CertificateError):
            verify_certificate(G, replace(good, alpha=1))
        with self.assertRaises(CertificateError):
            verify_certificate(G, replace(good, bound=1))
        with self.assertRaises(CertificateError):
            verify_certificate(G, ab_certificate(G, {0, 1, 3}, 0, 2))

    def test_balanced_needs_its_weighting(self):
        G = path(5)
        w = Weighting.uniform(5)
        cert = balanced_certificate(G, {2}, w, "3/4")
        self.assertTrue(verify_certificate(G, cert, w).verified)
        with self.assertRaises(CertificateError):
            verify_certificate(G, cert)
        with self.assertRaises(CertificateError):
            verify_certificate(G, cert, Weighting([1, 0, 0, 0, 0]))
        with self.assertRaises(CertificateError):
            verify_certificate(G, balanced_certificate(G, {0}, w, "3/4"), w)


class RefutationTest(unittest.TestCase):

    def test_refute_finds_witnesses(self):
        self.assertEqual(refute(path(6), 2, "3.1", "detail").report.vertices, (0, 1, 2, 3, 4, 5))
        found = refute(cycle(4), 2, "3.1", "detail").report
        self.assertEqual((found.kind, found.vertices), ("K2t", (0, 2, 1, 3)))
        found = refute(complete(3), 2, "3.1", "detail", [2, 0]).report
        self.assertEqual((found.kind, found.vertices), ("assertion", (0, 2)))

    def test_conclude(self):
        self.assertTrue(conclude(True, path(6), 2, True, "3.1", "fine"))
        with self.assertLogs("tin_lemmas.refutation", level="WARNING"):
            self.assertFalse(conclude(False, path(6), 2, False, "3.1", "broken"))
        with self.assertRaises(LemmaViolation) as caught:
            conclude(False, path(6), 2, True, "3.1", "broken")
        self.assertEqual(caught.exception.report.kind, "P6")

    def test_lifted_relabels(self):
        sub = path(8).induced_subgraph({3, 4, 5})
        with self.assertRaises(LemmaViolation) as caught:
            with lifted(sub, "outer"):
                raise violation("4.1", "detail", [0, 2])
        self.assertEqual(caught.exception.report.vertices, (3, 5))
        self.assertEqual(caught.exception.provenance, ["outer"])
        with self.assertRaises(PreconditionError) as caught:
            with lifted(sub, "outer"):
                raise PreconditionError(cause="boom")
        self.assertEqual(str(caught.exception), "boom [via outer]")


class SmallAlphaSeparatorTest(unittest.TestCase):

    def setUp(self):
        self.cfg = BoundConfig(t=2)

    def test_path(self):
        cert = small_alpha_ab_separator(path(4), 0, 3, self.cfg)
        self.assertEqual(cert.separator, frozenset({1}))
        self.assertEqual((cert.route, cert.lemma, cert.alpha), ("neighbors", "3.1", 1))
        self.assertTrue(cert.verified)

    def test_cycle(self):
        cert = small_alpha_ab_separator(cycle(6), 0, 3, self.cfg)
        self.assertEqual(cert.separator, frozenset({1, 5}))

    def test_pyramid_route(self):
        # 18 independent apex neighbours exceed 14(t-1)+3
        G = pyramid_fan(18)
        cert = small_alpha_ab_separator(G, 0, 37, self.cfg)
        self.assertEqual(cert.route, "pyramid")
        self.assertEqual(cert.separator, frozenset({1, 2, 3}) | frozenset(range(19, 37)))
        self.assertEqual(cert.alpha, 4)
        self.assertTrue(cert.verified)
        self.assertTrue(is_ab_separator(G, cert.separator, 0, 37))

    def test_preconditions(self):
        with self.assertRaises(PreconditionError):
            small_alpha_ab_separator(path(4), 0, 1, self.cfg)
        with self.assertRaises(PreconditionError):
            small_alpha_ab_separator(path(4), 2, 2, self.cfg)
        with self.assertRaises(PreconditionError):
            small_alpha_ab_separator(path(4), 0, 9, self.cfg)


class NeighborhoodSeparatorTest(unittest.TestCase):

    def setUp(self):
        self.cfg = BoundConfig(t=2)

    def test_heavy_neighborhood(self):
        G = star(5)
        w = Weighting.uniform(6)
        cert = neighborhood_balanced_separator(G, w, self.cfg)
        self.assertEqual(cert.route, "heavy-neighborhood")
        self.assertEqual((cert.z0, cert.Z), (0, frozenset()))
        self.assertEqual(cert.separator, frozenset(range(6)))
        self.assertTrue(cert.verified)

    def test_bounded_separators(self):
        G = cycle(24)
        w = Weighting.uniform(24)
        cert = neighborhood_balanced_separator(G, w, self.cfg)
        self.assertEqual(cert.route, "bounded-separators")
        self.assertTrue(cert.verified)
        self.assertTrue(is_balanced_separator(G, cert.separator, w, Fraction(7, 8)))
        self.assertLessEqual(cert.alpha_Z, self.cfg.g_impl)

    def test_preconditions(self):
        with self.assertRaises(PreconditionError):
            neighborhood_balanced_separator(Graph(2), Weighting.uniform(2), self.cfg)
        with self.assertRaises(PreconditionError):
            neighborhood_balanced_separator(path(3), Weighting([1, 1, 1]), self.cfg)
        with self.assertRaises(PreconditionError):
            neighborhood_balanced_separator(path(3), Weighting.uniform(4), self.cfg)


class CombinedSeparatorTest(unittest.TestCase):

    def setUp(self):
        self.cfg = BoundConfig(t=2)

    def test_clique(self):
        w = Weighting.uniform(5)
        cert = lemma33_balanced_separator(complete(5), w, self.cfg)
        self.assertEqual((cert.route, cert.separator), ("clique", frozenset({0})))
        self.assertTrue(cert.verified)

    def test_balanced_on_cycles(self):
        for n in (8, 12, 20):
            G = cycle(n)
            w = Weighting.uniform(n)
            cert = lemma33_balanced_separator(G, w, self.cfg)
            self.assertTrue(is_balanced_separator(G, cert.separator, w, self.cfg.c))
            self.assertLessEqual(cert.alpha, self.cfg.s_bound)

    def test_oracle_errors_carry_provenance(self):
        def broken(G, w):
            raise PreconditionError(cause="boom")

        with self.assertRaises(PreconditionError) as caught:
            lemma33_balanced_separator(complete(5), Weighting.uniform(5), self.cfg, oracle_b=broken)
        self.assertEqual(str(caught.exception), "boom [via lemma 3.3 oracle_b]")

    def test_rejects_unnormal_weighting(self):
        with self.assertRaises(PreconditionError):
            lemma33_balanced_separator(complete(3), Weighting([1, 1, 1]), self.cfg)


class RelabelledHostTest(unittest.TestCase):

    def setUp(self):
        self.cfg = BoundConfig(t=2)

    def test_component_of_a_disconnected_graph(self):
        H = largest_component(Graph(5, [(1, 2), (2, 3), (3, 4)]))
        self.assertEqual(H.labels, (1, 2, 3, 4))
        cert = small_alpha_ab_separator(H, 0, 3, self.cfg)
        self.assertEqual(cert.separator, frozenset({1}))
        self.assertTrue(cert.verified)

    def test_balanced_separator_of_an_induced_subgraph(self):
        sub = cycle(10).induced_subgraph(range(2, 9))
        w = Weighting.uniform(sub.n)
        cert = neighborhood_balanced_separator(sub, w, replace(self.cfg, assert_mode=False))
        self.assertEqual(cert.separator, frozenset({0, 1, 2}))
        self.assertTrue(verify_certificate(sub, cert, w).verified)

    def test_sampled_components(self):
        for seed in range(6):
            H = largest_component(sample_free(14, 2, 0.2, seed))
            if H.n < 2:
                continue
            w = Weighting.uniform(H.n)
            self.assertTrue(neighborhood_balanced_separator(H, w, self.cfg).verified, seed)
            self.assertTrue(lemma33_balanced_separator(H, w, self.cfg).verified, seed)
            far = max(range(H.n), key=lambda v: (len(nx.shortest_path(H.nx_graph, 0, v)), -v))
            if far != 0 and not H.has_edge(0, far):
                self.assertTrue(small_alpha_ab_separator(H, 0, far, self.cfg).verified, seed)


if __name__ == "__main__":
    unittest.main()
