##
# \file ngram_table.py
# \brief      Relative frequencies of tokens following n-token contexts,
#             estimated from a corpus of generated texts
#

import collections
import numpy as np

import wmbench.base.exceptions as exceptions


class NGramTable(object):

    ##
    # \param      self    The object
    # \param      n       context length, int >= 1
    # \param      counts  dictionary mapping context tuples to dictionaries
    #                     token id -> count
    #
    def __init__(self, n, counts):
        if n < 1:
            raise exceptions.InvalidParameter(
                "n-gram context length must be at least 1")
        self._n = n
        self._counts = {}
        self._totals = {}
        self._frequencies = {}
        for context, successors in counts.items():
            ids = np.array(sorted(successors.keys()), dtype=np.int64)
            values = np.array([successors[i] for i in ids], dtype=np.int64)
            total = int(values.sum())
            if total == 0:
                continue
            self._counts[tuple(context)] = (ids, values)
            self._totals[tuple(context)] = total
            self._frequencies[tuple(context)] = dict(
                zip(ids.tolist(), (values / float(total)).tolist()))

    def get_n(self):
        return self._n

    def get_contexts(self):
        return sorted(self._counts.keys())

    def get_number_of_keys(self):
        return sum([ids.size for ids, values in self._counts.values()])

    def get_counts(self, context):
        return self._counts[tuple(context)]

    def get_total(self, context):
        return self._totals.get(tuple(context), 0)

    def has_context(self, context):
        return tuple(context) in self._counts

    ##
    # Relative frequency of a token following the context; 0 if unseen
    #
    def get_frequency(self, context, token_id):
        successors = self._frequencies.get(tuple(context))
        if successors is None:
            return 0.
        return successors.get(int(token_id), 0.)

    ##
    # Relative frequencies of all tokens following the context
    #
    # \return     numpy array of length vocabulary_size
    #
    def get_distribution(self, context, vocabulary_size):
        distribution = np.zeros(vocabulary_size)
        if self.has_context(context):
            ids, values = self._counts[tuple(context)]
            distribution[ids] = values / float(self._totals[tuple(context)])
        return distribution


##
# Count every window of n + 1 consecutive tokens of the corpus.
#
# \param      corpus  list of TokenSequence
# \param      n       context length
#
# \return     NGramTable
#
def build_ngram_table(corpus, n):
    if n < 1:
        raise exceptions.InvalidParameter(
            "n-gram context length must be at least 1")

    counts = collections.defaultdict(collections.Counter)
    for text in corpus:
        ids = text.get_ids().tolist()
        for i in range(n, len(ids)):
            counts[tuple(ids[i - n:i])][ids[i]] += 1

    if len(counts) == 0:
        raise exceptions.EmptyCorpus("n-gram corpus (n = %d)" % n)

    return NGramTable(n, counts)
