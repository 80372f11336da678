##
# \file partition_test.py
#  \brief  Unit tests for SplitMix64 and the vocabulary partitions
#


import unittest
import numpy as np

import wmbench.base.exceptions as exceptions
import wmbench.watermark.partition as pt
import wmbench.watermark.splitmix64 as sm


class SplitMix64Test(unittest.TestCase):

    def setUp(self):
        self.precision = 7
        self.reference = [
            0xE220A8397B1DCDAF,
            0x6E789E6AA1B965F4,
            0x06C45D188009454F,
        ]

    def test_reference_outputs(self):
        generator = sm.SplitMix64(0)
        outputs = [generator.next() for i in range(3)]
        self.assertEqual(outputs, self.reference)

    def test_next_array_matches_next(self):
        generator_1 = sm.SplitMix64(0)
        generator_2 = sm.SplitMix64(0)
        outputs = generator_1.next_array(3)
        self.assertEqual([int(o) for o in outputs], self.reference)

        generator_2.next_array(2)
        self.assertEqual(generator_2.next(), self.reference[2])

        seed = 2 ** 63 + 12345
        generator_1 = sm.SplitMix64(seed)
        generator_2 = sm.SplitMix64(seed)
        outputs = generator_1.next_array(100)
        self.assertEqual([int(o) for o in outputs],
                         [generator_2.next() for i in range(100)])

    def test_mix64_array(self):
        values = [0, 1, 42, 2 ** 64 - 1, 15485863]
        mixed = sm.mix64_array(np.array(values, dtype=np.uint64))
        self.assertEqual([int(m) for m in mixed],
                         [sm.mix64(v) for v in values])


class PartitionTest(unittest.TestCase):

    def setUp(self):
        self.precision = 7
        self.key = 15485863

    def test_shuffle_is_permutation(self):
        for n in [0, 1, 2, 7, 100]:
            ids = pt.shuffle_ids(self.key, n)
            self.assertEqual(sorted(ids), list(range(n)))
        self.assertEqual(pt.shuffle_ids(self.key, 50),
                         pt.shuffle_ids(self.key, 50))
        self.assertNotEqual(pt.shuffle_ids(self.key, 50), list(range(50)))

    def test_fixed_partition_sizes(self):
        partition = pt.partition_fixed(self.key, 11)
        self.assertEqual(partition.get_green_ids().size, 6)
        self.assertEqual(partition.get_red_ids().size, 5)
        self.assertEqual(partition.get_vocabulary_size(), 11)

        partition = pt.partition_fixed(self.key, 10)
        self.assertEqual(partition.get_green_ids().size, 5)

    def test_fixed_partition_matches_shuffle(self):
        shuffled = pt.shuffle_ids(self.key, 11)
        partition = pt.partition_fixed(self.key, 11)
        self.assertEqual(sorted(shuffled[:6]),
                         partition.get_green_ids().tolist())

    def test_complement(self):
        partition = pt.partition_fixed(self.key, 11)
        complement = partition.get_complement()
        self.assertEqual(complement.get_green_ids().tolist(),
                         partition.get_red_ids().tolist())
        self.assertFalse(np.any(
            partition.get_green_mask() & complement.get_green_mask()))
        self.assertEqual(complement.get_complement(), partition)

    def test_hashed_partitions(self):
        vocabulary_size = 50
        partitions = [pt.partition_hashed(self.key, c, vocabulary_size)
                      for c in range(5)]
        for partition in partitions:
            self.assertEqual(partition.get_green_ids().size, 25)
        self.assertTrue(any(p != partitions[0] for p in partitions[1:]))
        self.assertEqual(
            pt.partition_hashed(self.key, 3, vocabulary_size), partitions[3])

        # hashed partitions differ from the fixed one for the same key
        fixed = pt.partition_fixed(self.key, vocabulary_size)
        self.assertTrue(any(p != fixed for p in partitions))

    def test_invalid_arguments(self):
        self.assertRaises(exceptions.InvalidParameter,
                          pt.partition_hashed, self.key, 10, 10)
        self.assertRaises(exceptions.InvalidParameter,
                          pt.partition_hashed, self.key, -1, 10)
        self.assertRaises(exceptions.InvalidParameter,
                          pt.partition_fixed, self.key, 1)
