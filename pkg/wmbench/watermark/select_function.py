##
# \file select_function.py
# \brief      Frequency-rank parity Select Function of the Balanced
#             Watermark
#
# Tokens are ordered by descending frequency (ties by ascending id). The
# token of 1-based rank j maps to 1 if j is even and to 0 otherwise.
#

import hashlib
import numpy as np

import pysitk.python_helper as ph

import wmbench.base.exceptions as exceptions
import wmbench.base.token_sequence as ts
import wmbench.language_model.sampler as sampler


class SelectFunction(object):

    ##
    # \param      self                The object
    # \param      bits                0/1 per token id, array of length |V|
    # \param      frequency_snapshot  optional hash of the frequencies the
    #                                 function was built from
    #
    def __init__(self, bits, frequency_snapshot=None):
        self._bits = np.asarray(bits, dtype=np.uint8)
        self._bits.setflags(write=False)
        if np.any(self._bits > 1):
            raise exceptions.InvalidParameter("select bits must be 0 or 1")
        self._frequency_snapshot = frequency_snapshot

    def get_bits(self):
        return self._bits

    def get_bit(self, token_id):
        return int(self._bits[token_id])

    def get_vocabulary_size(self):
        return self._bits.size

    def get_number_of_ones(self):
        return int(self._bits.sum())

    def get_frequency_snapshot(self):
        return self._frequency_snapshot

    def get_memory_bytes(self):
        return self._bits.nbytes

    def __eq__(self, other):
        return isinstance(other, SelectFunction) and \
            np.array_equal(self._bits, other._bits)

    def __ne__(self, other):
        return not self.__eq__(other)


def get_frequency_snapshot(counts):
    counts = np.ascontiguousarray(counts, dtype=np.int64)
    return hashlib.sha256(counts.tobytes()).hexdigest()


##
# Build the Select Function from token frequencies.
#
# \param      freq             counts indexed by token id (array) or mapping
#                              token id -> count; missing ids count 0
# \param      vocabulary_size  |V|, required if freq is a mapping
#
# \return     SelectFunction
#
def build_select_function(freq, vocabulary_size=None):
    if isinstance(freq, dict):
        if vocabulary_size is None:
            raise exceptions.InvalidParameter(
                "vocabulary size required for frequency mapping")
        counts = np.zeros(vocabulary_size, dtype=np.int64)
        for token_id, count in freq.items():
            counts[token_id] = count
    else:
        counts = np.asarray(freq, dtype=np.int64)
        if vocabulary_size is not None and counts.size < vocabulary_size:
            counts = np.concatenate([
                counts, np.zeros(vocabulary_size - counts.size, np.int64)])

    ids = np.arange(counts.size)
    ranking = np.lexsort((ids, -counts))

    bits = np.zeros(counts.size, dtype=np.uint8)
    # ranks 2, 4, 6, ... sit at the odd 0-based positions
    bits[ranking[1::2]] = 1

    return SelectFunction(bits, get_frequency_snapshot(counts))


##
# Count token frequencies of unwatermarked generations.
#
# \param      model       LanguageModel
# \param      n_texts     number of generated texts, int >= 1
# \param      max_tokens  tokens per text
# \param      rng         numpy Generator
# \param      prompts     optional prompts used in turn; empty prompt if None
# \param      verbose     print progress
#
# \return     counts indexed by token id, numpy array of length |V|
#
def count_token_frequencies(model, n_texts, max_tokens, rng,
                            prompts=None,
                            temperature=1.,
                            verbose=False,
                            ):
    if n_texts < 1:
        raise exceptions.InvalidParameter(
            "at least one text is required to count frequencies")

    counts = np.zeros(model.get_vocabulary_size(), dtype=np.int64)
    for i in range(n_texts):
        if prompts:
            prompt = prompts[i % len(prompts)]
        else:
            prompt = ts.TokenSequence([], role="prompt")
        text = sampler.generate(
            model, prompt, max_tokens, rng, temperature=temperature)
        counts += np.bincount(text.get_ids(), minlength=counts.size)

    if verbose:
        ph.print_info("Counted %d tokens of %d generated texts "
                      "(%d distinct)" % (
                          counts.sum(), n_texts, np.count_nonzero(counts)))
    return counts
