##
# \file watermark_processor.py
# \brief      Watermark embedders acting as step hooks of the generation
#             loop
#
# Every step the processor selects the green list of the next position,
# adds the bias delta to the green logits and returns the resulting
# probability vector. UNIW keeps one key-derived green list A. KGW
# re-partitions the vocabulary from a hash of the context token y_{i-w}. BW
# keeps the fixed halves A and B and lets the Select Function of y_{i-w}
# choose A (bit 1) or B (bit 0) as green. Context positions before the
# start of the sequence are the sentinel id.
#

import six
import collections
import numpy as np
from abc import ABCMeta, abstractmethod
from scipy.special import softmax

import wmbench.base.exceptions as exceptions
import wmbench.language_model.sampler as sampler
import wmbench.watermark.partition as pt
from wmbench.definitions import SENTINEL_ID
from wmbench.definitions import PARTITION_CACHE_SIZE
from wmbench.definitions import DEFAULT_TEMPERATURE

# bytes per entry of a logit bias vector
BIAS_ITEM_BYTES = 8


##
# Watermark probability of every token.
#
# p_k = exp(l_k + delta [k in green]) / sum_j exp(l_j + delta [j in green])
#
# \param      logits  LogitsVector, numpy array
# \param      green   boolean mask of length |V| or collection of green ids
# \param      delta   bias, real >= 0
#
# \return     probability vector, numpy array
#
def apply_bias(logits, green, delta):
    if delta < 0:
        raise exceptions.InvalidParameter("delta must be nonnegative")
    logits = np.asarray(logits, dtype=np.float64)

    green_mask = np.asarray(green)
    if green_mask.dtype != bool or green_mask.shape != logits.shape:
        green_mask = np.zeros(logits.size, dtype=bool)
        green_mask[np.asarray(list(green), dtype=np.int64)] = True

    return softmax(logits + delta * green_mask)


class WatermarkProcessor(six.with_metaclass(ABCMeta, object)):

    def __init__(self, config, vocabulary_size):
        self._config = config
        self._vocabulary_size = vocabulary_size
        self._last_green_mask = None
        self.reset_statistics()

    def get_config(self):
        return self._config

    def get_vocabulary_size(self):
        return self._vocabulary_size

    ##
    # Green mask selected by a context token, i.e. by y_{i-w}
    #
    # \param      self           The object
    # \param      context_token  token id
    #
    # \return     boolean numpy array of length |V|
    #
    @abstractmethod
    def get_green_mask_by_context_token(self, context_token):
        pass

    ##
    # Green mask of the position following the given context
    #
    # \param      self         The object
    # \param      context_ids  all preceding token ids, prompt included
    #
    def get_green_mask(self, context_ids):
        return self.get_green_mask_by_context_token(
            self.get_context_token(context_ids))

    @abstractmethod
    def get_auxiliary_bytes(self):
        pass

    def get_context_token(self, context_ids):
        window = self._config.get_window()
        if len(context_ids) < window:
            return SENTINEL_ID
        return int(context_ids[len(context_ids) - window])

    ##
    # Step hook of the generation loop
    #
    def __call__(self, logits, context_ids, step):
        self._last_green_mask = self.get_green_mask(context_ids)
        return apply_bias(
            logits, self._last_green_mask, self._config.get_delta())

    ##
    # Observer of the generation loop tallying green tokens over the
    # positions scored by the detector
    #
    def observe(self, token_id, step):
        if step < self._config.get_number_of_unscored_positions():
            return
        self._green_count += int(self._last_green_mask[token_id])
        self._scored_count += 1

    def reset_statistics(self):
        self._green_count = 0
        self._scored_count = 0

    ##
    # Green tally of the embedder since the last reset
    #
    # \return     (g, T)
    #
    def get_statistics(self):
        return self._green_count, self._scored_count


class UnigramWatermark(WatermarkProcessor):

    def __init__(self, config, vocabulary_size):
        WatermarkProcessor.__init__(self, config, vocabulary_size)
        self._partition = pt.partition_fixed(
            config.get_key(), vocabulary_size)

    def get_partition(self):
        return self._partition

    def get_green_mask_by_context_token(self, context_token):
        return self._partition.get_green_mask()

    def get_auxiliary_bytes(self):
        return BIAS_ITEM_BYTES * self._vocabulary_size


class KGWWatermark(WatermarkProcessor):

    def __init__(self, config, vocabulary_size,
                 cache_size=PARTITION_CACHE_SIZE):
        WatermarkProcessor.__init__(self, config, vocabulary_size)
        if cache_size < 1:
            raise exceptions.InvalidParameter(
                "partition cache size must be at least 1")
        self._cache_size = cache_size
        self._partitions = collections.OrderedDict()

    ##
    # Green list seeded by the context token. At most cache_size partitions
    # are kept, the least recently used one is dropped first.
    #
    def get_partition(self, context_token):
        context_token = int(context_token)
        if context_token in self._partitions:
            self._partitions.move_to_end(context_token)
            return self._partitions[context_token]

        partition = pt.partition_hashed(
            self._config.get_key(), context_token, self._vocabulary_size)
        self._partitions[context_token] = partition
        if len(self._partitions) > self._cache_size:
            self._partitions.popitem(last=False)
        return partition

    def get_number_of_cached_partitions(self):
        return len(self._partitions)

    def get_green_mask_by_context_token(self, context_token):
        return self.get_partition(context_token).get_green_mask()

    def get_auxiliary_bytes(self):
        return BIAS_ITEM_BYTES * self._vocabulary_size


class BalancedWatermark(WatermarkProcessor):

    def __init__(self, config, vocabulary_size, select_function):
        if select_function.get_vocabulary_size() != vocabulary_size:
            raise exceptions.InvalidWatermarkConfig(
                "Select Function covers %d ids, vocabulary has %d" % (
                    select_function.get_vocabulary_size(), vocabulary_size))
        self._select_function = select_function
        self._partition_a = pt.partition_fixed(
            config.get_key(), vocabulary_size)
        self._partition_b = self._partition_a.get_complement()
        WatermarkProcessor.__init__(self, config, vocabulary_size)

    def get_select_function(self):
        return self._select_function

    def get_partition_a(self):
        return self._partition_a

    def get_partition_b(self):
        return self._partition_b

    ##
    # Green partition chosen by the Select Function bit of the context token
    #
    def select_green(self, context_token):
        return select_green(self._select_function, context_token,
                            self._partition_a, self._partition_b)

    def get_green_mask_by_context_token(self, context_token):
        return self.select_green(context_token).get_green_mask()

    def __call__(self, logits, context_ids, step):
        green = self.select_green(self.get_context_token(context_ids))
        self._selected_a = green is self._partition_a
        self._last_green_mask = green.get_green_mask()
        return apply_bias(
            logits, self._last_green_mask, self._config.get_delta())

    def observe(self, token_id, step):
        WatermarkProcessor.observe(self, token_id, step)
        self._steps += 1
        self._steps_a += int(self._selected_a)

    def reset_statistics(self):
        WatermarkProcessor.reset_statistics(self)
        self._steps = 0
        self._steps_a = 0
        self._selected_a = False

    ##
    # Number of generation steps and of steps selecting A as green
    #
    def get_selection_statistics(self):
        return self._steps, self._steps_a

    def get_auxiliary_bytes(self):
        return 2 * BIAS_ITEM_BYTES * self._vocabulary_size + \
            self._select_function.get_memory_bytes()


##
# Select Function based green choice over fixed halves A and B
#
# \param      select_function  SelectFunction
# \param      context_token    token id
# \param      partition_a      Partition whose green list is A
# \param      partition_b      Partition whose green list is B
#
# \return     partition_a if the bit is 1, otherwise partition_b
#
def select_green(select_function, context_token, partition_a, partition_b):
    if select_function.get_bit(context_token) == 1:
        return partition_a
    return partition_b


def create_processor(config, vocabulary_size, select_function=None):
    scheme = config.get_scheme()
    if scheme == "UNIW":
        return UnigramWatermark(config, vocabulary_size)
    if scheme == "KGW":
        return KGWWatermark(config, vocabulary_size)
    if select_function is None:
        raise exceptions.InvalidWatermarkConfig(
            "%s requires a Select Function" % config.get_label())
    return BalancedWatermark(config, vocabulary_size, select_function)


##
# Generate a watermarked continuation of a prompt.
#
# \param      model            LanguageModel
# \param      config           WatermarkConfig
# \param      prompt           TokenSequence with at least one token
# \param      max_tokens       number of generated tokens
# \param      rng              numpy Generator
# \param      select_function  SelectFunction, required for BW
# \param      processor        optional processor for the configuration, e.g.
#                              to reuse cached partitions or read statistics
# \param      temperature      sampling temperature
#
# \return     TokenSequence with role 'generated'
#
def watermarked_generate(model, config, prompt, max_tokens, rng,
                         select_function=None,
                         processor=None,
                         temperature=DEFAULT_TEMPERATURE,
                         ):
    if len(prompt) < 1:
        raise exceptions.InvalidParameter(
            "watermarked generation requires a non-empty prompt")
    if processor is None:
        processor = create_processor(
            config, model.get_vocabulary_size(), select_function)

    return sampler.generate(
        model, prompt, max_tokens, rng,
        step_hook=processor,
        temperature=temperature,
        observer=processor.observe,
    )
