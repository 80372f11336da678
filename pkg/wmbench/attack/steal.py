##
# \file steal.py
# \brief      STEAL spoofing attack learning the green tendencies of a
#             watermark from n-gram frequency gaps between watermarked and
#             clean texts, without access to the key
#
# For a context ctx and token T with relative frequencies p_w (watermarked
# texts) and p_b (clean texts) the score is
#
#   s(T, ctx) = 1/2 min(p_w / p_b, 2)   if p_w / p_b >= 1,
#               0                       otherwise.
#
# A token seen only in the watermarked table (p_b = 0 < p_w) gets the cap 1.
# Contexts missing in either table score 0. During generation the bias
# intensity * s(k, ctx) is added to the logit of every token k, where ctx
# are the last n generated tokens; no bias is applied until n tokens exist.
#

import numpy as np
from scipy.special import softmax

import pysitk.python_helper as ph

import wmbench.base.exceptions as exceptions
import wmbench.attack.ngram_table as nt
import wmbench.language_model.sampler as sampler
from wmbench.definitions import STEAL_NS
from wmbench.definitions import DEFAULT_INTENSITY
from wmbench.definitions import DEFAULT_TEMPERATURE
from wmbench.definitions import STREAM_STEAL


class SpoofConfig(object):

    ##
    # \param      self       The object
    # \param      n          context length, one of 1, 2, 3, 4
    # \param      intensity  attack bias multiplier, real >= 0
    #
    def __init__(self, n, intensity=DEFAULT_INTENSITY):
        if n not in STEAL_NS:
            raise exceptions.InvalidParameter(
                "STEAL context length must be in %s (got %s)" % (STEAL_NS, n))
        if intensity < 0:
            raise exceptions.InvalidParameter(
                "attack intensity must be nonnegative (got %g)" % intensity)
        self._n = n
        self._intensity = float(intensity)

    def get_n(self):
        return self._n

    def get_intensity(self):
        return self._intensity

    def get_label(self):
        return "steal%d" % self._n


def _check_tables(table_w, table_b):
    if table_w.get_n() != table_b.get_n():
        raise exceptions.InvalidParameter(
            "n-gram tables differ in n (%d vs %d)" % (
                table_w.get_n(), table_b.get_n()))


def spoof_score(table_w, table_b, context, token_id):
    _check_tables(table_w, table_b)
    if not table_w.has_context(context) or not table_b.has_context(context):
        return 0.

    p_w = table_w.get_frequency(context, token_id)
    p_b = table_b.get_frequency(context, token_id)
    if p_b == 0:
        return 1. if p_w > 0 else 0.

    ratio = p_w / p_b
    if ratio >= 1:
        return 0.5 * min(ratio, 2.)
    return 0.


##
# Scores of all tokens following a context, see spoof_score
#
# \return     numpy array of length vocabulary_size
#
def spoof_score_vector(table_w, table_b, context, vocabulary_size):
    _check_tables(table_w, table_b)
    scores = np.zeros(vocabulary_size)
    if not table_w.has_context(context) or not table_b.has_context(context):
        return scores

    p_w = table_w.get_distribution(context, vocabulary_size)
    p_b = table_b.get_distribution(context, vocabulary_size)

    seen = p_b > 0
    ratio = np.zeros(vocabulary_size)
    ratio[seen] = p_w[seen] / p_b[seen]
    scores[seen] = np.where(
        ratio[seen] >= 1, 0.5 * np.minimum(ratio[seen], 2.), 0.)
    scores[~seen & (p_w > 0)] = 1.
    return scores


##
# Step hook adding the spoofing bias to the logits.
#
# Biases are kept sparse, as token ids and values, and only for contexts
# present in both tables; every other context leaves the logits unchanged.
#
class SpoofProcessor(object):

    def __init__(self, table_w, table_b, config, vocabulary_size):
        _check_tables(table_w, table_b)
        if table_w.get_n() != config.get_n():
            raise exceptions.InvalidParameter(
                "tables built for n = %d, attack configured for n = %d" % (
                    table_w.get_n(), config.get_n()))
        self._table_w = table_w
        self._table_b = table_b
        self._config = config
        self._vocabulary_size = vocabulary_size
        self._biases = {}

    ##
    # Nonzero part of the bias following a context
    #
    # \return     (token ids, bias values) as numpy arrays, or None if the
    #             context is missing in either table
    #
    def get_bias(self, context):
        context = tuple(int(i) for i in context)
        if context in self._biases:
            return self._biases[context]
        if not self._table_w.has_context(context) or \
                not self._table_b.has_context(context):
            return None

        scores = spoof_score_vector(self._table_w, self._table_b, context,
                                    self._vocabulary_size)
        ids = np.flatnonzero(scores)
        bias = (ids, self._config.get_intensity() * scores[ids])
        self._biases[context] = bias
        return bias

    def get_bias_vector(self, context):
        bias_vector = np.zeros(self._vocabulary_size)
        bias = self.get_bias(context)
        if bias is not None:
            ids, values = bias
            bias_vector[ids] = values
        return bias_vector

    def get_number_of_cached_contexts(self):
        return len(self._biases)

    def __call__(self, logits, context_ids, step):
        n = self._config.get_n()
        if step < n:
            return softmax(logits)

        bias = self.get_bias(context_ids[-n:])
        if bias is None:
            return softmax(logits)

        ids, values = bias
        logits = np.array(logits, dtype=np.float64)
        logits[ids] += values
        return softmax(logits)


##
# Generate a spoofed continuation of a prompt
#
# \param      model       LanguageModel
# \param      table_w     NGramTable of watermarked texts
# \param      table_b     NGramTable of clean texts
# \param      config      SpoofConfig
# \param      prompt      TokenSequence
# \param      max_tokens  number of generated tokens
# \param      rng         numpy Generator
# \param      processor   optional SpoofProcessor sharing cached biases
#
# \return     TokenSequence with role 'generated'
#
def spoof_generate(model, table_w, table_b, config, prompt, max_tokens, rng,
                   processor=None,
                   temperature=DEFAULT_TEMPERATURE,
                   ):
    if processor is None:
        processor = SpoofProcessor(
            table_w, table_b, config, model.get_vocabulary_size())
    return sampler.generate(model, prompt, max_tokens, rng,
                            step_hook=processor,
                            temperature=temperature)


##
# Run the four STEAL attacks (n = 1..4) on a watermark.
#
# \param      model               LanguageModel
# \param      watermarked_corpus  list of TokenSequence, generated with the
#                                 attacked watermark
# \param      clean_corpus        list of TokenSequence, unwatermarked
# \param      prompts             list of TokenSequence
# \param      seed                run seed deriving the per-text streams
# \param      intensity           attack intensity
# \param      max_tokens          tokens per spoofed text
# \param      ns                  context lengths to attack with
# \param      tables              optional dictionary receiving the
#                                 n-gram tables n -> (table_w, table_b)
# \param      verbose             print progress
#
# \return     dictionary n -> list of spoofed TokenSequence
#
def steal_suite(model, watermarked_corpus, clean_corpus, prompts, seed,
                intensity=DEFAULT_INTENSITY,
                max_tokens=200,
                ns=STEAL_NS,
                temperature=DEFAULT_TEMPERATURE,
                tables=None,
                verbose=False,
                ):
    if len(watermarked_corpus) == 0:
        raise exceptions.EmptyCorpus("watermarked corpus")
    if len(clean_corpus) == 0:
        raise exceptions.EmptyCorpus("clean corpus")
    if len(prompts) == 0:
        raise exceptions.EmptyCorpus("prompt set")

    spoofed = {}
    for n in ns:
        time_start = ph.start_timing()
        config = SpoofConfig(n, intensity)
        table_w = nt.build_ngram_table(watermarked_corpus, n)
        table_b = nt.build_ngram_table(clean_corpus, n)
        if tables is not None:
            tables[n] = (table_w, table_b)
        processor = SpoofProcessor(
            table_w, table_b, config, model.get_vocabulary_size())

        spoofed[n] = [
            spoof_generate(model, table_w, table_b, config, prompt,
                           max_tokens, sampler.create_rng(
                               seed, STREAM_STEAL, n, i),
                           processor=processor,
                           temperature=temperature)
            for i, prompt in enumerate(prompts)]

        if verbose:
            ph.print_info("STEAL-%d: %d spoofed texts from tables with "
                          "%d / %d keys (%s)" % (
                              n, len(prompts), table_w.get_number_of_keys(),
                              table_b.get_number_of_keys(),
                              ph.stop_timing(time_start)))
    return spoofed
