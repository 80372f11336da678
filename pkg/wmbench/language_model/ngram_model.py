##
# \file ngram_model.py
# \brief      Laplace-smoothed backoff n-gram language model
#
# Count tables are kept for every context length L = 0..order-1. A context
# is looked up by its longest suffix seen during training and the smoothed
# probability (c + alpha) / (C + alpha |V|) is taken from that level.
#

import collections
import numpy as np

import pysitk.python_helper as ph

import wmbench.base.exceptions as exceptions
import wmbench.base.vocabulary as voc
import wmbench.language_model.language_model as lm

# bytes per stored integer of count tables
ITEM_BYTES = 8


##
# Counts of one context: ids of observed successors, their counts and the
# total number of observations
#
ContextCounts = collections.namedtuple(
    "ContextCounts", ["ids", "counts", "total"])


class NGramModel(lm.LanguageModel):

    ##
    # \param      self        The object
    # \param      vocabulary  Vocabulary object
    # \param      order       order k, context length k-1
    # \param      alpha       Laplace smoothing constant, alpha > 0
    # \param      tables      list of length k; entry L maps context tuples
    #                         of length L to ContextCounts
    #
    def __init__(self, vocabulary, order, alpha, tables):
        lm.LanguageModel.__init__(self, vocabulary=vocabulary)

        if order < 1:
            raise exceptions.InvalidParameter("order must be at least 1")
        if alpha <= 0:
            raise exceptions.InvalidParameter("alpha must be positive")
        if len(tables) != order:
            raise exceptions.InvalidParameter(
                "expected %d count tables, got %d" % (order, len(tables)))
        if () not in tables[0]:
            raise exceptions.EmptyCorpus()

        self._order = order
        self._alpha = float(alpha)
        self._tables = tables

    ##
    # Train a model from a list of documents.
    #
    # If a vocabulary is given, it is used frozen, i.e. unseen words are
    # counted as sentinel. This allows a scoring model trained on a disjoint
    # split to share the id space of the generation model.
    #
    # \param      corpus      documents, list of strings
    # \param      order       order k of model, int >= 1
    # \param      alpha       Laplace smoothing constant
    # \param      vocabulary  optional Vocabulary object
    # \param      verbose     print summary
    #
    # \return     NGramModel
    #
    @classmethod
    def train(cls, corpus, order, alpha, vocabulary=None, verbose=False):
        if order < 1:
            raise exceptions.InvalidParameter("order must be at least 1")

        if vocabulary is None:
            vocabulary = voc.Vocabulary()
            policy = "build"
        else:
            policy = "frozen"

        sequences = [vocabulary.tokenize(text, vocab_policy=policy)
                     for text in corpus]
        model = cls.train_from_sequences(sequences, vocabulary, order, alpha)

        if verbose:
            ph.print_info(
                "Trained order-%d model on %d documents: "
                "%d tokens, |V| = %d" % (
                    order, len(corpus), model.get_number_of_training_tokens(),
                    vocabulary.get_size()))
        return model

    @classmethod
    def train_from_sequences(cls, sequences, vocabulary, order, alpha):
        counters = [collections.defaultdict(collections.Counter)
                    for L in range(order)]

        for sequence in sequences:
            ids = sequence.get_ids().tolist()
            for i, token in enumerate(ids):
                for L in range(min(order - 1, i) + 1):
                    counters[L][tuple(ids[i - L:i])][token] += 1

        if len(counters[0]) == 0:
            raise exceptions.EmptyCorpus()

        tables = [cls.convert_counts(c) for c in counters]
        return cls(vocabulary, order, alpha, tables)

    @staticmethod
    def convert_counts(counter):
        table = {}
        for context, successors in counter.items():
            ids = np.array(sorted(successors.keys()), dtype=np.int64)
            counts = np.array([successors[i] for i in ids], dtype=np.int64)
            table[context] = ContextCounts(ids, counts, int(counts.sum()))
        return table

    def get_order(self):
        return self._order

    def get_alpha(self):
        return self._alpha

    def get_tables(self):
        return self._tables

    def get_number_of_training_tokens(self):
        return self._tables[0][()].total

    ##
    # Get longest suffix of the context seen during training
    #
    # \param      self         The object
    # \param      context_ids  preceding token ids
    #
    # \return     context tuple and its ContextCounts
    #
    def get_backoff_context(self, context_ids):
        context = tuple(int(i) for i in context_ids)
        max_length = min(self._order - 1, len(context))
        for L in range(max_length, -1, -1):
            suffix = context[len(context) - L:]
            if suffix in self._tables[L]:
                return suffix, self._tables[L][suffix]

    def logits(self, context_ids):
        context, entry = self.get_backoff_context(context_ids)
        size = self._vocabulary.get_size()

        probs = np.full(size, self._alpha)
        probs[entry.ids] += entry.counts
        probs /= entry.total + self._alpha * size

        return np.log(probs)

    def get_memory_bytes(self):
        n_bytes = 0
        for L, table in enumerate(self._tables):
            for context, entry in table.items():
                n_bytes += ITEM_BYTES * (L + 1 + 2 * entry.ids.size)
        return n_bytes
