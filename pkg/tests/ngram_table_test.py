##
# \file ngram_table_test.py
#  \brief  Unit tests for n-gram frequency tables
#


import unittest
import numpy as np

import wmbench.base.exceptions as exceptions
import wmbench.base.token_sequence as ts
import wmbench.attack.ngram_table as nt


class NGramTableTest(unittest.TestCase):

    def setUp(self):
        self.precision = 7
        self.corpus = [ts.TokenSequence([1, 2, 1, 2, 3])]

    def test_build_unigram_contexts(self):
        table = nt.build_ngram_table(self.corpus, 1)
        self.assertEqual(table.get_n(), 1)
        self.assertEqual(table.get_contexts(), [(1,), (2,)])
        self.assertEqual(table.get_number_of_keys(), 3)
        self.assertEqual(table.get_total((2,)), 2)

        ids, counts = table.get_counts((1,))
        self.assertEqual(ids.tolist(), [2])
        self.assertEqual(counts.tolist(), [2])

    def test_frequencies(self):
        table = nt.build_ngram_table(self.corpus, 1)
        self.assertAlmostEqual(table.get_frequency((1,), 2), 1.,
                               places=self.precision)
        self.assertAlmostEqual(table.get_frequency((2,), 1), 0.5,
                               places=self.precision)
        self.assertAlmostEqual(table.get_frequency((2,), 3), 0.5,
                               places=self.precision)
        self.assertEqual(table.get_frequency((2,), 2), 0.)
        self.assertEqual(table.get_frequency((3,), 1), 0.)
        self.assertEqual(table.get_total((3,)), 0)

        np.testing.assert_array_almost_equal(
            table.get_distribution((2,), 5), [0, .5, 0, .5, 0],
            decimal=self.precision)
        np.testing.assert_array_equal(table.get_distribution((4,), 5),
                                      np.zeros(5))

    def test_build_bigram_contexts(self):
        table = nt.build_ngram_table(
            self.corpus + [ts.TokenSequence([1, 2, 3])], 2)
        self.assertEqual(table.get_contexts(), [(1, 2), (2, 1)])
        self.assertEqual(table.get_total((1, 2)), 3)
        self.assertAlmostEqual(table.get_frequency((1, 2), 3), 2. / 3,
                               places=self.precision)
        self.assertTrue(table.has_context([2, 1]))

    def test_invalid_arguments(self):
        self.assertRaises(exceptions.InvalidParameter,
                          nt.build_ngram_table, self.corpus, 0)
        self.assertRaises(exceptions.EmptyCorpus,
                          nt.build_ngram_table, [ts.TokenSequence([1])], 1)
        self.assertRaises(exceptions.EmptyCorpus,
                          nt.build_ngram_table, [], 1)
