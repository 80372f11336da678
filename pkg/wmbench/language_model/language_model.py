##
# \file language_model.py
# \brief      Abstract interface of conditional language models used for
#             generation, watermark embedding and perplexity scoring.
#

import six
import numpy as np
from abc import ABCMeta, abstractmethod
from scipy.special import softmax


class LanguageModel(six.with_metaclass(ABCMeta, object)):

    def __init__(self, vocabulary):
        self._vocabulary = vocabulary

    def get_vocabulary(self):
        return self._vocabulary

    def get_vocabulary_size(self):
        return self._vocabulary.get_size()

    ##
    # Unnormalized log-space scores of the next token.
    #
    # \param      self         The object
    # \param      context_ids  preceding token ids, iterable of int
    #
    # \return     finite logits, numpy array of length |V|
    #
    @abstractmethod
    def logits(self, context_ids):
        pass

    ##
    # Deterministic number of bytes held by the model tables
    #
    @abstractmethod
    def get_memory_bytes(self):
        pass

    def get_probabilities(self, context_ids):
        return softmax(np.asarray(self.logits(context_ids), dtype=np.float64))
