##
# \file green_token_detector.py
# \brief      Green-token counting and z-statistic detection
#
# The detector recomputes the partition of every scored position exactly as
# the embedder did. KGW and BW score positions j = w..|text|-1 (0-based)
# with context token text[j-w]; UNIW scores every position. No prompt is
# needed for detection.
#

import numpy as np

import pysitk.python_helper as ph

import wmbench.base.exceptions as exceptions
import wmbench.watermark.watermark_processor as wp
from wmbench.definitions import GAMMA
from wmbench.definitions import Z_THRESHOLD


class DetectionResult(object):

    def __init__(self, green_count, scored_tokens, z):
        self._green_count = int(green_count)
        self._scored_tokens = int(scored_tokens)
        self._z = float(z)

    def get_green_count(self):
        return self._green_count

    def get_scored_tokens(self):
        return self._scored_tokens

    def get_z(self):
        return self._z

    def get_green_fraction(self):
        if self._scored_tokens == 0:
            return 0.
        return self._green_count / float(self._scored_tokens)

    def is_watermarked(self, z_threshold=Z_THRESHOLD):
        return self._z >= z_threshold

    def __repr__(self):
        return "DetectionResult(g=%d, T=%d, z=%.4f)" % (
            self._green_count, self._scored_tokens, self._z)


##
# z-statistic (g - gamma T) / sqrt(T gamma (1 - gamma)) with gamma = 0.5
#
# \param      g     number of green tokens
# \param      T     number of scored tokens, T >= 1
#
# \return     z, real
#
def z_score(g, T):
    if T < 1:
        raise exceptions.InvalidParameter("at least one scored token needed")
    return (g - GAMMA * T) / np.sqrt(T * GAMMA * (1. - GAMMA))


class GreenTokenDetector(object):

    ##
    # \param      self             The object
    # \param      config           WatermarkConfig
    # \param      vocabulary_size  |V|
    # \param      select_function  SelectFunction, required for BW
    # \param      verbose          print warnings and summaries
    #
    def __init__(self, config, vocabulary_size,
                 select_function=None,
                 verbose=False,
                 ):
        self._config = config
        self._processor = wp.create_processor(
            config, vocabulary_size, select_function)
        self._vocabulary_size = vocabulary_size
        self._verbose = verbose
        self._computational_time = ph.get_zero_time()

    def get_config(self):
        return self._config

    def get_computational_time(self):
        return self._computational_time

    ##
    # Count green tokens of a text.
    #
    # \param      self  The object
    # \param      text  TokenSequence
    #
    # \return     (g, T)
    #
    def count_green(self, text):
        ids = text.get_ids()
        text.check_ids(self._vocabulary_size)

        offset = self._config.get_number_of_unscored_positions()
        if len(ids) <= offset or len(ids) < 1:
            raise exceptions.TextTooShort(len(ids), offset + 1)

        green_count = 0
        for j in range(offset, len(ids)):
            if self._config.get_scheme() == "UNIW":
                context_token = None
            else:
                context_token = int(ids[j - offset])
            green_mask = self._processor.get_green_mask_by_context_token(
                context_token)
            green_count += int(green_mask[ids[j]])

        return green_count, len(ids) - offset

    def detect(self, text):
        green_count, scored_tokens = self.count_green(text)
        return DetectionResult(
            green_count, scored_tokens, z_score(green_count, scored_tokens))

    ##
    # Detect a batch of texts.
    #
    # Texts too short to be scored yield g = T = 0 and z = 0.
    #
    # \param      self   The object
    # \param      texts  list of TokenSequence
    #
    # \return     list of DetectionResult
    #
    def detect_corpus(self, texts):
        time_start = ph.start_timing()

        results = []
        n_too_short = 0
        for text in texts:
            try:
                results.append(self.detect(text))
            except exceptions.TextTooShort:
                n_too_short += 1
                results.append(DetectionResult(0, 0, 0.))

        self._computational_time = ph.stop_timing(time_start)

        if n_too_short > 0:
            ph.print_warning(
                "%d of %d texts too short for %s detection; scored z = 0" % (
                    n_too_short, len(texts), self._config.get_label()))
        if self._verbose:
            ph.print_info("%s: detected %d texts (%s)" % (
                self._config.get_label(), len(texts),
                self._computational_time))
        return results


##
# Count green tokens of a text for a watermark configuration
#
# \param      text             TokenSequence
# \param      config           WatermarkConfig
# \param      vocabulary_size  |V|
# \param      select_function  SelectFunction, required for BW
#
# \return     (g, T)
#
def count_green(text, config, vocabulary_size, select_function=None):
    detector = GreenTokenDetector(config, vocabulary_size, select_function)
    return detector.count_green(text)
