##
# \file watermark_config.py
# \brief      Parameters of a watermark scheme and their labels (UNIW,
#             KGW<w>, BW<w>)
#

import re

import wmbench.base.exceptions as exceptions
from wmbench.definitions import SCHEME_KINDS
from wmbench.definitions import GAMMA
from wmbench.definitions import DEFAULT_DELTA
from wmbench.definitions import DEFAULT_KEY

REGEX_LABEL = re.compile(r"^(UNIW|KGW|BW)([0-9]*)$")


class WatermarkConfig(object):

    ##
    # \param      self    The object
    # \param      scheme  'UNIW', 'KGW' or 'BW'
    # \param      delta   logit bias, real >= 0 (0 disables the bias)
    # \param      window  watermark complexity w >= 1; ignored by UNIW
    # \param      key     secret 64-bit key, nonnegative int
    # \param      gamma   green fraction, only 0.5 is supported
    #
    def __init__(self, scheme,
                 delta=DEFAULT_DELTA,
                 window=1,
                 key=DEFAULT_KEY,
                 gamma=GAMMA,
                 ):
        if scheme not in SCHEME_KINDS:
            raise exceptions.InvalidWatermarkConfig(
                "scheme '%s' not in %s" % (scheme, SCHEME_KINDS))
        if delta < 0:
            raise exceptions.InvalidWatermarkConfig(
                "delta must be nonnegative (got %g)" % delta)
        if window < 1:
            raise exceptions.InvalidWatermarkConfig(
                "window must be at least 1 (got %d)" % window)
        if gamma != GAMMA:
            raise exceptions.InvalidWatermarkConfig(
                "only gamma = %g is supported" % GAMMA)
        if key < 0 or key >= 2 ** 64:
            raise exceptions.InvalidWatermarkConfig(
                "key must be a 64-bit unsigned integer")

        self._scheme = scheme
        self._delta = float(delta)
        self._window = 1 if scheme == "UNIW" else int(window)
        self._key = int(key)
        self._gamma = gamma

    ##
    # Create configuration from a label such as 'UNIW', 'KGW4' or 'BW2'
    #
    @classmethod
    def from_label(cls, label, delta=DEFAULT_DELTA, key=DEFAULT_KEY):
        match = REGEX_LABEL.match(label)
        if match is None:
            raise exceptions.InvalidWatermarkConfig(
                "label '%s' does not follow UNIW, KGW<w> or BW<w>" % label)
        scheme, window = match.groups()

        if scheme == "UNIW":
            if window != "":
                raise exceptions.InvalidWatermarkConfig(
                    "UNIW does not take a window (got '%s')" % label)
            return cls(scheme, delta=delta, key=key)

        if window == "":
            raise exceptions.InvalidWatermarkConfig(
                "%s requires a window, e.g. '%s1'" % (scheme, scheme))
        return cls(scheme, delta=delta, window=int(window), key=key)

    def get_label(self):
        if self._scheme == "UNIW":
            return "UNIW"
        return "%s%d" % (self._scheme, self._window)

    def get_scheme(self):
        return self._scheme

    def get_delta(self):
        return self._delta

    def get_window(self):
        return self._window

    def get_key(self):
        return self._key

    def get_gamma(self):
        return self._gamma

    ##
    # Number of leading positions of a text without in-text context token
    #
    def get_number_of_unscored_positions(self):
        if self._scheme == "UNIW":
            return 0
        return self._window

    def __repr__(self):
        return "WatermarkConfig(%s, delta=%g, key=%d)" % (
            self.get_label(), self._delta, self._key)
