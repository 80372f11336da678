##
# \file vocabulary_test.py
#  \brief  Unit tests for tokenizer, vocabulary and token sequences
#


import unittest
import numpy as np

import wmbench.base.exceptions as exceptions
import wmbench.base.token_sequence as ts
import wmbench.base.vocabulary as voc
from wmbench.definitions import SENTINEL_ID
from wmbench.definitions import SENTINEL_TOKEN


class VocabularyTest(unittest.TestCase):

    def test_split_text_punctuation(self):
        self.assertEqual(
            voc.split_text("Hello, World!"),
            ["hello", ",", "world", "!"])
        self.assertEqual(
            voc.split_text("(don't) stop..."),
            ["(", "don't", ")", "stop", ".", ".", "."])
        self.assertEqual(voc.split_text("  \t\n "), [])

    def test_split_text_keeps_sentinel(self):
        self.assertEqual(
            voc.split_text("a %s b" % SENTINEL_TOKEN),
            ["a", SENTINEL_TOKEN, "b"])

    def test_ids_in_order_of_first_appearance(self):
        vocabulary = voc.Vocabulary()
        sequence = vocabulary.tokenize("b a b c")

        self.assertEqual(vocabulary.get_token(SENTINEL_ID), SENTINEL_TOKEN)
        self.assertEqual(vocabulary.get_tokens(),
                         [SENTINEL_TOKEN, "b", "a", "c"])
        self.assertEqual(sequence.get_ids().tolist(), [1, 2, 1, 3])
        self.assertEqual(len(vocabulary), 4)
        self.assertTrue("c" in vocabulary)

    def test_frozen_policy_maps_unseen_words_to_sentinel(self):
        vocabulary = voc.Vocabulary(["a", "b"])
        sequence = vocabulary.tokenize("a x b", vocab_policy="frozen")

        self.assertEqual(sequence.get_ids().tolist(), [1, SENTINEL_ID, 2])
        self.assertEqual(vocabulary.get_size(), 3)

    def test_decode_retokenizes_to_same_ids(self):
        vocabulary = voc.Vocabulary()
        sequence = vocabulary.tokenize("The cat, (quietly) slept.")
        text = vocabulary.decode(sequence)

        self.assertEqual(text, "the cat , ( quietly ) slept .")
        self.assertEqual(
            vocabulary.tokenize(text, vocab_policy="frozen"), sequence)

    def test_invalid_arguments(self):
        vocabulary = voc.Vocabulary(["a"])
        self.assertRaises(exceptions.InvalidParameter,
                          vocabulary.get_token, 2)
        self.assertRaises(exceptions.InvalidParameter,
                          vocabulary.tokenize, "a", "grow")


class TokenSequenceTest(unittest.TestCase):

    def test_roles_and_slicing(self):
        sequence = ts.TokenSequence([3, 1, 2], role="generated")
        prompt = sequence.head(2, role="prompt")

        self.assertEqual(prompt.get_ids().tolist(), [3, 1])
        self.assertEqual(prompt.get_role(), "prompt")
        self.assertEqual(sequence.head(5).get_role(), "generated")

        full = prompt.concatenate(sequence)
        self.assertEqual(full.get_role(), "full")
        self.assertEqual(len(full), 5)

    def test_get_ids_returns_copy(self):
        sequence = ts.TokenSequence([1, 2])
        ids = sequence.get_ids()
        ids[0] = 7
        self.assertEqual(sequence.get_ids().tolist(), [1, 2])
        self.assertEqual(sequence.get_ids().dtype, np.int64)

    def test_invalid_sequences(self):
        self.assertRaises(exceptions.InvalidParameter,
                          ts.TokenSequence, [1, -1])
        self.assertRaises(exceptions.InvalidParameter,
                          ts.TokenSequence, [1], "answer")
        self.assertRaises(exceptions.InvalidParameter,
                          ts.TokenSequence([0, 5]).check_ids, 5)
