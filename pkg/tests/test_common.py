import os
import tempfile
import unittest
from fractions import Fraction

from tin_common.config import clean_value, get_builder_baseline, get_default_config, load_config
from tin_common.digest import get_digest
from tin_common.errors import (EXIT_BUDGET, EXIT_CERTIFICATE, EXIT_OK, EXIT_PRECONDITION, BudgetExhaustedError,
                               CertificateError, CounterexampleReport, GraphFormatError, LemmaViolation,
                               PreconditionError, exit_code_of, violation)
from tin_common.formats import parse_edgelist, parse_graph6, parse_weights, read_graphs, to_edgelist, to_graph6
from tin_common.weighting import Weighting, check_ratio, heaviest_component, is_balanced_separator, to_fraction
from tin_generators.named import complete, cycle, path, t_pyramid


class WeightingTest(unittest.TestCase):

    def test_fractions(self):
        self.assertEqual(to_fraction("7/8"), Fraction(7, 8))
        self.assertEqual(to_fraction("0.25"), Fraction(1, 4))
        self.assertEqual(to_fraction(0.5), Fraction(1, 2))
        self.assertEqual(to_fraction(3), Fraction(3))
        with self.assertRaises(PreconditionError):
            to_fraction("seven")
        with self.assertRaises(PreconditionError):
            to_fraction(True)

    def test_ratio_range(self):
        self.assertEqual(check_ratio("1/2"), Fraction(1, 2))
        with self.assertRaises(PreconditionError):
            check_ratio("1/3")
        with self.assertRaises(PreconditionError):
            check_ratio(1)

    def test_negative_weights(self):
        with self.assertRaises(PreconditionError):
            Weighting([1, -1])

    def test_uniform_and_normal(self):
        w = Weighting.uniform(4, {0, 1})
        self.assertEqual(w.weights, (Fraction(1, 2), Fraction(1, 2), 0, 0))
        self.assertTrue(w.is_normal())
        self.assertTrue(Weighting([0, 0]).is_trivial())
        self.assertEqual(Weighting([1, 3]).normalized().weights, (Fraction(1, 4), Fraction(3, 4)))
        with self.assertRaises(PreconditionError):
            Weighting([0, 0]).normalized()

    def test_renormalized(self):
        w = Weighting([1, 1, 2]).renormalized({1, 2})
        self.assertEqual(w.weights, (0, Fraction(1, 3), Fraction(2, 3)))

    def test_balanced_examples(self):
        G = path(5)
        w = Weighting.uniform(5)
        self.assertTrue(is_balanced_separator(G, {2}, w, "1/2"))
        self.assertFalse(is_balanced_separator(G, {0}, w, "1/2"))
        self.assertTrue(is_balanced_separator(G, range(5), w, "1/2"))

    def test_balanced_rejects_bad_ratio(self):
        with self.assertRaises(PreconditionError):
            is_balanced_separator(path(3), {1}, Weighting.uniform(3), "1/4")

    def test_monotone_in_c(self):
        G = cycle(8)
        w = Weighting([3, 1, 4, 1, 5, 9, 2, 6])
        for S in ({0}, {0, 4}, {1, 5}, {2, 3, 6}):
            for c in ("1/2", "2/3", "3/4", "7/8"):
                if is_balanced_separator(G, S, w, c):
                    self.assertTrue(is_balanced_separator(G, S, w, "15/16"))

    def test_normalizing_preserves_balance(self):
        G = cycle(7)
        w = Weighting([2, 0, 5, 1, 1, 3, 4])
        for S in ({0}, {0, 3}, {1, 4}, {2, 5, 6}):
            for c in ("1/2", "3/5", "7/8"):
                self.assertEqual(is_balanced_separator(G, S, w, c),
                                 is_balanced_separator(G, S, w.normalized(), c))

    def test_host_mismatch(self):
        with self.assertRaises(PreconditionError):
            is_balanced_separator(path(3), (), Weighting.uniform(4), "1/2")

    def test_heaviest_component(self):
        G = path(5)
        self.assertEqual(heaviest_component(G, {1}, Weighting([1, 0, 1, 1, 0])), frozenset({2, 3, 4}))
        self.assertIsNone(heaviest_component(G, range(5), Weighting.uniform(5)))


class FormatsTest(unittest.TestCase):

    def test_graph6_known_strings(self):
        self.assertEqual(to_graph6(complete(4)), "C~")
        self.assertEqual(to_graph6(path(2)), "A_")
        G = parse_graph6("C~")
        self.assertEqual(G.edge_count, 6)

    def test_graph6_header(self):
        self.assertEqual(parse_graph6(">>graph6<<C~").edge_count, 6)

    def test_graph6_error_carries_line(self):
        with self.assertRaises(GraphFormatError) as caught:
            read_graphs("C~\n\n@@@@@@@@\n")
        self.assertEqual(caught.exception.line, 3)

    def test_graph6_of_pyramid(self):
        G = t_pyramid(3)
        H = parse_graph6(to_graph6(G))
        self.assertEqual(H.edges(), G.edges())

    def test_edgelist_with_count(self):
        G = parse_edgelist("# a path\n5\n0 1\n1 2  # middle\n\n2 3\n")
        self.assertEqual(G.n, 5)
        self.assertEqual(G.edges(), [(0, 1), (1, 2), (2, 3)])

    def test_edgelist_without_count(self):
        self.assertEqual(parse_edgelist("0 1\n1 3\n").n, 4)

    def test_edgelist_errors(self):
        with self.assertRaises(GraphFormatError) as caught:
            parse_edgelist("3\n0 1\n1 x\n")
        self.assertEqual(caught.exception.line, 3)
        with self.assertRaises(GraphFormatError):
            parse_edgelist("3\n0 3\n")
        with self.assertRaises(GraphFormatError):
            parse_edgelist("1 1\n")
        with self.assertRaises(GraphFormatError):
            parse_edgelist("0 1 2\n")

    def test_edgelist_writer(self):
        self.assertEqual(to_edgelist(path(3)), "3\n0 1\n1 2\n")
        self.assertEqual(parse_edgelist(to_edgelist(cycle(5))).edges(), cycle(5).edges())

    def test_read_graphs_edgelist(self):
        graphs = read_graphs("3\n0 1\n", "edgelist")
        self.assertEqual(len(graphs), 1)
        with self.assertRaises(PreconditionError):
            read_graphs("", "dot")

    def test_weights(self):
        w = parse_weights('["1/2", 0.25, "1/4"]')
        self.assertEqual(w.weights, (Fraction(1, 2), Fraction(1, 4), Fraction(1, 4)))
        with self.assertRaises(GraphFormatError):
            parse_weights("{")
        with self.assertRaises(GraphFormatError):
            parse_weights('{"a": 1}')
        with self.assertRaises(GraphFormatError):
            parse_weights('["-1"]')


class ErrorsTest(unittest.TestCase):

    def test_message_templates(self):
        self.assertEqual(str(PreconditionError(cause="bad vertex")), "bad vertex")
        self.assertEqual(str(GraphFormatError(line=4, cause="oops")), "line 4: oops")
        self.assertEqual(str(BudgetExhaustedError(search="pyramid search", budget=10)),
                         "pyramid search exhausted its budget of 10 search nodes")

    def test_provenance(self):
        err = CertificateError(cause="not balanced").add_provenance("lemma 3.2").add_provenance("builder")
        self.assertEqual(str(err), "certificate rejected: not balanced [via builder <- lemma 3.2]")

    def test_exit_codes(self):
        self.assertEqual(exit_code_of(None), EXIT_OK)
        self.assertEqual(exit_code_of(CertificateError(cause="x")), EXIT_CERTIFICATE)
        self.assertEqual(exit_code_of(PreconditionError(cause="x")), EXIT_PRECONDITION)
        self.assertEqual(exit_code_of(BudgetExhaustedError(search="s", budget=1)), EXIT_BUDGET)
        self.assertEqual(exit_code_of(violation("3.1", "failed")), EXIT_CERTIFICATE)

    def test_violation_relabelled(self):
        err = violation("4.1", "detail", [0, 2, 1], kind="P6").add_provenance("lemma 3.1")
        lifted = err.relabelled([10, 11, 12])
        self.assertIsInstance(lifted, LemmaViolation)
        self.assertEqual(lifted.report.vertices, (10, 12, 11))
        self.assertEqual(lifted.provenance, ["lemma 3.1"])
        self.assertEqual(lifted.report.to_dict()["kind"], "P6")

    def test_report_kind_checked(self):
        with self.assertRaises(ValueError):
            CounterexampleReport("P7", (), "3.1")


class ConfigTest(unittest.TestCase):

    def test_defaults(self):
        config = get_default_config()
        self.assertEqual(config["t"], 2)
        self.assertEqual(config["c"], "7/8")
        self.assertIsNone(config["q"])
        self.assertIsNone(config["g_impl"])
        self.assertEqual(config["assert_mode"], "on")

    def test_clean_value(self):
        self.assertIsNone(clean_value("None"))
        self.assertEqual(clean_value(3), 3)

    def test_file_and_overrides(self):
        with tempfile.TemporaryDirectory() as folder:
            path_ = os.path.join(folder, "conf.yaml")
            with open(path_, "w", encoding="utf-8") as handle:
                handle.write("params:\n  t: 3\n  q: None\n  seed: 9\ncommands: []\n")
            config = load_config(path_, {"seed": 4, "budget": None})
        self.assertEqual(config["t"], 3)
        self.assertEqual(config["seed"], 4)
        self.assertEqual(config["budget"], 10000000)
        self.assertIsNone(config["q"])

    def test_unknown_key(self):
        with tempfile.TemporaryDirectory() as folder:
            path_ = os.path.join(folder, "conf.yaml")
            with open(path_, "w", encoding="utf-8") as handle:
                handle.write("colour: blue\n")
            with self.assertRaises(PreconditionError):
                load_config(path_)

    def test_builder_baseline(self):
        baseline = get_builder_baseline()
        self.assertEqual(sorted(baseline), list(range(1, 10)))
        self.assertEqual((baseline[1], baseline[2], baseline[9]), (1, 1, 8))
        self.assertIsInstance(baseline[5], Fraction)


class DigestTest(unittest.TestCase):

    def test_stable_and_skips_empty(self):
        self.assertEqual(get_digest("a", "b"), get_digest("a", None, "", "b"))
        self.assertNotEqual(get_digest("a", "b"), get_digest("b", "a"))
        self.assertEqual(len(get_digest("x")), 40)
        with self.assertRaises(ValueError):
            get_digest(1)


if __name__ == "__main__":
    unittest.main()
