##
# \file normalization.py
# \brief      Normalization of raw metric values into [0, 1] under the
#             Original, Preset and Comparison bounds principles
#
# A metric value V is mapped linearly such that the upper bound V_u gives 1
# and the lower bound V_l gives 0; values outside are clamped. The upper
# bound may be smaller than the lower bound for metrics where smaller is
# better (e.g. time or perplexity).
#

import numpy as np

import wmbench.base.exceptions as exceptions

BOUNDS_KINDS = ["original", "preset", "comparison"]
COMPARISON_RULES = ["detectability-floor", "double-degradation"]


##
# Clamp (v - lower) / (upper - lower) into [0, 1]
#
# \param      v      metric value
# \param      upper  value mapped to 1
# \param      lower  value mapped to 0, lower != upper
#
# \return     normalized value, real in [0, 1]
#
def normalize(v, upper, lower):
    if upper == lower:
        raise exceptions.DegenerateBounds(upper, lower)
    return float(np.clip((v - lower) / float(upper - lower), 0., 1.))


class BoundsSpec(object):

    def __init__(self, kind, upper, lower, baseline=None, rule=None):
        if kind not in BOUNDS_KINDS:
            raise exceptions.InvalidParameter(
                "bounds kind must be one of %s" % BOUNDS_KINDS)
        if upper == lower:
            raise exceptions.DegenerateBounds(upper, lower)
        self._kind = kind
        self._upper = float(upper)
        self._lower = float(lower)
        self._baseline = baseline
        self._rule = rule

    ##
    # Bounds given by the range of the metric itself, e.g. 1 and 0.5 for
    # AUCROC
    #
    @classmethod
    def original(cls, upper, lower):
        return cls("original", upper, lower)

    ##
    # Bounds chosen by the user
    #
    @classmethod
    def preset(cls, upper, lower):
        return cls("preset", upper, lower)

    ##
    # Bounds derived from a baseline value.
    #
    # 'detectability-floor': the baseline (e.g. AUCROC before an attack) is
    # the upper bound, random guessing (0.5) the lower bound.
    # 'double-degradation': the baseline (e.g. metric of the unwatermarked
    # model) is the upper bound, twice the baseline the lower bound.
    #
    # \param      baseline  baseline value
    # \param      rule      'detectability-floor' or 'double-degradation'
    #
    @classmethod
    def comparison(cls, baseline, rule):
        if rule == "detectability-floor":
            if baseline <= 0.5:
                raise exceptions.DegenerateBounds(baseline, 0.5)
            return cls("comparison", baseline, 0.5,
                       baseline=baseline, rule=rule)

        if rule == "double-degradation":
            if baseline <= 0:
                raise exceptions.NonpositiveBaseline(baseline)
            return cls("comparison", baseline, 2. * baseline,
                       baseline=baseline, rule=rule)

        raise exceptions.InvalidParameter(
            "comparison rule must be one of %s" % COMPARISON_RULES)

    def get_kind(self):
        return self._kind

    def get_upper(self):
        return self._upper

    def get_lower(self):
        return self._lower

    def get_baseline(self):
        return self._baseline

    def get_rule(self):
        return self._rule

    def normalize(self, v):
        return normalize(v, self._upper, self._lower)

    def to_dict(self):
        dic = {
            "kind": self._kind,
            "upper": self._upper,
            "lower": self._lower,
        }
        if self._rule is not None:
            dic["rule"] = self._rule
            dic["baseline"] = float(self._baseline)
        return dic
