##
# \file partition.py
# \brief      Green/red partitions of the vocabulary
#
# Partitions are derived from a Fisher-Yates shuffle of the ids
# 0..|V|-1 driven by a SplitMix64 stream. The first ceil(|V|/2) shuffled ids
# form the first half (list A), the remaining ids the second half (list B).
#

import numpy as np

import wmbench.base.exceptions as exceptions
import wmbench.watermark.splitmix64 as sm


class Partition(object):

    ##
    # \param      self        The object
    # \param      green_mask  boolean numpy array of length |V|
    #
    def __init__(self, green_mask):
        self._green_mask = np.asarray(green_mask, dtype=bool)
        self._green_mask.setflags(write=False)

    @classmethod
    def from_green_ids(cls, green_ids, vocabulary_size):
        green_mask = np.zeros(vocabulary_size, dtype=bool)
        green_mask[np.asarray(list(green_ids), dtype=np.int64)] = True
        return cls(green_mask)

    def get_green_mask(self):
        return self._green_mask

    def get_green_ids(self):
        return np.flatnonzero(self._green_mask)

    def get_red_ids(self):
        return np.flatnonzero(~self._green_mask)

    def get_vocabulary_size(self):
        return self._green_mask.size

    def is_green(self, token_id):
        return bool(self._green_mask[token_id])

    def get_complement(self):
        return Partition(~self._green_mask)

    def __eq__(self, other):
        return isinstance(other, Partition) and \
            np.array_equal(self._green_mask, other._green_mask)

    def __ne__(self, other):
        return not self.__eq__(other)


##
# Key-driven permutation of the ids 0..n-1.
#
# For i = n-1 down to 1, j = next() mod (i+1) and ids i and j are swapped.
#
# \param      seed  64-bit seed of the SplitMix64 stream
# \param      n     number of ids
#
# \return     permutation as list of int
#
def shuffle_ids(seed, n):
    ids = list(range(n))
    if n < 2:
        return ids

    draws = sm.SplitMix64(seed).next_array(n - 1)
    moduli = np.arange(n, 1, -1, dtype=np.uint64)
    swaps = (draws % moduli).tolist()

    for k, i in enumerate(range(n - 1, 0, -1)):
        j = swaps[k]
        ids[i], ids[j] = ids[j], ids[i]

    return ids


def _partition_from_seed(seed, vocabulary_size):
    if vocabulary_size < 2:
        raise exceptions.InvalidParameter(
            "partitioning requires at least 2 tokens")
    shuffled = shuffle_ids(seed, vocabulary_size)
    n_green = (vocabulary_size + 1) // 2
    return Partition.from_green_ids(shuffled[:n_green], vocabulary_size)


##
# Fixed key-derived partition; its green list is list A.
#
# \param      key              secret 64-bit key
# \param      vocabulary_size  |V| >= 2
#
# \return     Partition
#
def partition_fixed(key, vocabulary_size):
    return _partition_from_seed(int(key) & sm.MASK_64, vocabulary_size)


##
# Partition seeded by the key and a context token.
#
# \param      key              secret 64-bit key
# \param      context_token    token id < |V|
# \param      vocabulary_size  |V| >= 2
#
# \return     Partition
#
def partition_hashed(key, context_token, vocabulary_size):
    if context_token < 0 or context_token >= vocabulary_size:
        raise exceptions.InvalidParameter(
            "context token %d outside vocabulary of size %d" % (
                context_token, vocabulary_size))
    seed = sm.mix64((int(key) & sm.MASK_64) ^ (int(context_token) + 1))
    return _partition_from_seed(seed, vocabulary_size)
