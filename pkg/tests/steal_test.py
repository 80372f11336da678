##
# \file steal_test.py
#  \brief  Unit tests for the STEAL spoofing attack
#


import unittest
import numpy as np
from scipy.special import softmax

import wmbench.base.exceptions as exceptions
import wmbench.base.token_sequence as ts
import wmbench.attack.ngram_table as nt
import wmbench.attack.steal as steal
import wmbench.language_model.ngram_model as ngm
import wmbench.language_model.sampler as sampler


class StealTest(unittest.TestCase):

    def setUp(self):
        self.precision = 7
        self.vocabulary_size = 6
        self.table_w = nt.NGramTable(1, {
            (1,): {2: 6, 3: 1, 5: 3},
            (2,): {1: 9, 3: 1},
            (3,): {1: 1},
        })
        self.table_b = nt.NGramTable(1, {
            (1,): {2: 4, 3: 5, 4: 1},
            (2,): {1: 3, 3: 7},
        })

    def test_spoof_score(self):
        score = self._get_score

        # ratio 1.5
        self.assertAlmostEqual(score((1,), 2), 0.75, places=self.precision)
        # ratio below one
        self.assertEqual(score((1,), 3), 0.)
        # seen in clean texts only
        self.assertEqual(score((1,), 4), 0.)
        # seen in watermarked texts only
        self.assertEqual(score((1,), 5), 1.)
        # unseen in both
        self.assertEqual(score((1,), 0), 0.)
        # ratio 3 is capped at 2
        self.assertAlmostEqual(score((2,), 1), 1., places=self.precision)
        # context missing in the clean table
        self.assertEqual(score((3,), 1), 0.)
        self.assertEqual(score((4,), 1), 0.)

    def _get_score(self, context, token_id):
        return steal.spoof_score(
            self.table_w, self.table_b, context, token_id)

    def test_vector_matches_scalar(self):
        for context in [(1,), (2,), (3,), (4,)]:
            vector = steal.spoof_score_vector(
                self.table_w, self.table_b, context, self.vocabulary_size)
            scalars = [steal.spoof_score(self.table_w, self.table_b,
                                         context, t)
                       for t in range(self.vocabulary_size)]
            np.testing.assert_array_almost_equal(
                vector, scalars, decimal=self.precision)

    def test_tables_must_agree(self):
        table_2 = nt.NGramTable(2, {(1, 2): {3: 1}})
        self.assertRaises(exceptions.InvalidParameter,
                          steal.spoof_score, self.table_w, table_2, (1,), 2)
        self.assertRaises(exceptions.InvalidParameter,
                          steal.SpoofProcessor, self.table_w, self.table_b,
                          steal.SpoofConfig(2), self.vocabulary_size)

    def test_no_bias_before_n_tokens(self):
        config = steal.SpoofConfig(1, intensity=4.)
        processor = steal.SpoofProcessor(
            self.table_w, self.table_b, config, self.vocabulary_size)
        logits = np.log(np.full(self.vocabulary_size, 1. / 6))

        # step 0: the context (1,) is part of the prompt
        np.testing.assert_array_almost_equal(
            processor(logits, [1], 0), softmax(logits),
            decimal=self.precision)

        bias = 4. * steal.spoof_score_vector(
            self.table_w, self.table_b, (1,), self.vocabulary_size)
        np.testing.assert_array_almost_equal(
            processor(logits, [3, 1], 1), softmax(logits + bias),
            decimal=self.precision)
        np.testing.assert_array_almost_equal(
            processor.get_bias_vector([1]), bias, decimal=self.precision)

    def test_only_known_contexts_are_cached(self):
        processor = steal.SpoofProcessor(
            self.table_w, self.table_b, steal.SpoofConfig(1, intensity=4.),
            self.vocabulary_size)
        logits = np.log(np.full(self.vocabulary_size, 1. / 6))

        # (4,) is unseen, (3,) is missing in the clean table
        for context_ids in [[0, 4], [0, 3], [4, 4], [1, 3]]:
            np.testing.assert_array_almost_equal(
                processor(logits, context_ids, 1), softmax(logits),
                decimal=self.precision)
            self.assertIsNone(processor.get_bias(context_ids[-1:]))
        self.assertEqual(processor.get_number_of_cached_contexts(), 0)

        for i in range(3):
            processor(logits, [0, 2], 1)
        self.assertEqual(processor.get_number_of_cached_contexts(), 1)

        ids, values = processor.get_bias([1])
        self.assertEqual(ids.tolist(), [2, 5])
        np.testing.assert_array_almost_equal(
            values, [3., 4.], decimal=self.precision)

    def test_longer_contexts_match_table_keys(self):
        table_w = nt.build_ngram_table(
            [ts.TokenSequence([1, 2, 3, 1, 2, 5])], 2)
        table_b = nt.build_ngram_table([ts.TokenSequence([1, 2, 3, 4])], 2)
        processor = steal.SpoofProcessor(
            table_w, table_b, steal.SpoofConfig(2, intensity=4.),
            self.vocabulary_size)
        logits = np.zeros(self.vocabulary_size)

        # the last two tokens of prompt and generation form the context
        bias = np.zeros(self.vocabulary_size)
        bias[5] = 4.
        np.testing.assert_array_almost_equal(
            processor(logits, np.array([0, 1, 2]), 2),
            softmax(logits + bias), decimal=self.precision)

        bias = np.zeros(self.vocabulary_size)
        bias[1] = 4.
        np.testing.assert_array_almost_equal(
            processor(logits, [5, 2, 3], 3), softmax(logits + bias),
            decimal=self.precision)
        self.assertEqual(processor.get_number_of_cached_contexts(), 2)

    def test_invalid_config(self):
        self.assertRaises(exceptions.InvalidParameter, steal.SpoofConfig, 0)
        self.assertRaises(exceptions.InvalidParameter, steal.SpoofConfig, 5)
        self.assertRaises(exceptions.InvalidParameter,
                          steal.SpoofConfig, 2, -1.)
        self.assertEqual(steal.SpoofConfig(3).get_label(), "steal3")

    def test_steal_suite(self):
        model = ngm.NGramModel.train(
            ["the cat sat on the mat and the dog sat on the log",
             "a bird flew over the house and a fish swam in the lake"],
            order=2, alpha=0.1)
        rng = sampler.create_rng(0)
        watermarked = [sampler.generate(
            model, ts.TokenSequence([1]), 30, rng) for i in range(5)]
        clean = [sampler.generate(
            model, ts.TokenSequence([1]), 30, rng) for i in range(5)]
        prompts = [ts.TokenSequence([1, 2], role="prompt"),
                   ts.TokenSequence([3], role="prompt")]

        tables = {}
        spoofed = steal.steal_suite(
            model, watermarked, clean, prompts, 3, max_tokens=20,
            ns=[1, 2], tables=tables)
        self.assertEqual(sorted(spoofed.keys()), [1, 2])
        self.assertEqual(sorted(tables.keys()), [1, 2])
        self.assertEqual(tables[2][0].get_n(), 2)
        for n in [1, 2]:
            self.assertEqual(len(spoofed[n]), 2)
            for text in spoofed[n]:
                self.assertEqual(len(text), 20)

        spoofed_2 = steal.steal_suite(
            model, watermarked, clean, prompts, 3, max_tokens=20, ns=[1, 2])
        self.assertEqual(spoofed[1], spoofed_2[1])

        self.assertRaises(exceptions.EmptyCorpus, steal.steal_suite,
                          model, [], clean, prompts, 3)
        self.assertRaises(exceptions.EmptyCorpus, steal.steal_suite,
                          model, watermarked, clean, [], 3)
