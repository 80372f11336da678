##
# \file characteristic_scores.py
# \brief      The five characteristic scores (detectability, text quality,
#             usability, robustness, imperceptibility) and their weighted
#             comprehensive score
#

import numpy as np

import wmbench.base.exceptions as exceptions
import wmbench.evaluation.normalization as nrm
from wmbench.definitions import CHARACTERISTICS
from wmbench.definitions import DEFAULT_WEIGHTS
from wmbench.definitions import SCENARIOS
from wmbench.definitions import STEAL_NS

WEIGHT_TOLERANCE = 1e-9

# Default bounds of the metrics with bounds fixed by their range
BOUNDS_AUCROC = nrm.BoundsSpec.original(1., 0.5)
BOUNDS_DETECT_TIME = nrm.BoundsSpec.original(0., 1.)
BOUNDS_STEAL = nrm.BoundsSpec.original(0.5, 1.)


def score_detectability(auc):
    return BOUNDS_AUCROC.normalize(auc)


##
# Score of a metric which is best at the baseline value and worst at twice
# the baseline value (perplexity, generation time, memory)
#
def score_double_degradation(v_marked, v_base):
    return nrm.BoundsSpec.comparison(
        v_base, "double-degradation").normalize(v_marked)


##
# \param      seconds_per_text  detection time of a single text
#
def score_detect_time(seconds_per_text):
    if seconds_per_text < 0:
        raise exceptions.InvalidParameter("detection time must be >= 0")
    return BOUNDS_DETECT_TIME.normalize(seconds_per_text)


def score_usability(s_mc, s_gt, s_dt):
    return float(np.mean([s_mc, s_gt, s_dt]))


def score_robustness(auc_before, auc_after):
    return nrm.BoundsSpec.comparison(
        auc_before, "detectability-floor").normalize(auc_after)


def score_steal(auc_spoof):
    return BOUNDS_STEAL.normalize(auc_spoof)


def check_scenario(scenario):
    if scenario not in SCENARIOS:
        raise exceptions.InvalidParameter(
            "scenario must be one of %s (got '%s')" % (SCENARIOS, scenario))


##
# Imperceptibility from the scores of the four STEAL attacks.
#
# If the attacker is authorized to probe the detector (scenario 'A') the
# most successful attack counts (minimum score). Otherwise ('NA') the
# attacker picks an attack at random and the expected score (mean) counts.
#
def score_imperceptibility(steal_scores, scenario):
    check_scenario(scenario)
    if len(steal_scores) != len(STEAL_NS):
        raise exceptions.InvalidParameter(
            "expected %d STEAL scores, got %d" % (
                len(STEAL_NS), len(steal_scores)))
    if scenario == "A":
        return float(np.min(steal_scores))
    return float(np.mean(steal_scores))


##
# Spoofed-text AUCROC of the four STEAL attacks aggregated per scenario
# ('A': maximum, 'NA': mean)
#
def aggregate_steal_aucroc(aucs, scenario):
    check_scenario(scenario)
    if scenario == "A":
        return float(np.max(aucs))
    return float(np.mean(aucs))


class WeightVector(object):

    ##
    # \param      self     The object
    # \param      weights  weights of S_D, S_T, S_U, S_R, S_I
    #
    def __init__(self, weights=DEFAULT_WEIGHTS):
        weights = [float(w) for w in weights]
        if len(weights) != len(CHARACTERISTICS):
            raise exceptions.InvalidWeights(
                weights, "expected %d weights" % len(CHARACTERISTICS))
        if min(weights) < 0 or abs(sum(weights) - 1.) > WEIGHT_TOLERANCE:
            raise exceptions.InvalidWeights(weights)
        self._weights = np.array(weights)

    def get_weights(self):
        return self._weights.copy()

    def get_weight(self, characteristic):
        return float(self._weights[CHARACTERISTICS.index(characteristic)])

    def to_dict(self):
        return dict(zip(CHARACTERISTICS, self._weights.tolist()))


class CharacteristicScores(object):

    ##
    # \param      self        The object
    # \param      scores      dictionary characteristic -> score in [0, 1]
    # \param      sub_scores  optional dictionary of sub-scores such as S_MC,
    #                         S_GT, S_DT and S_STEAL<n>
    #
    def __init__(self, scores, sub_scores=None):
        missing = [c for c in CHARACTERISTICS if c not in scores]
        if len(missing) > 0:
            raise exceptions.InvalidParameter(
                "missing characteristic scores %s" % missing)

        self._scores = {c: float(scores[c]) for c in CHARACTERISTICS}
        self._sub_scores = {} if sub_scores is None else \
            {k: float(v) for k, v in sub_scores.items()}

        for name, value in list(self._scores.items()) + \
                list(self._sub_scores.items()):
            if not 0 <= value <= 1:
                raise exceptions.InvalidParameter(
                    "score %s = %g outside [0, 1]" % (name, value))

    def get_score(self, characteristic):
        return self._scores[characteristic]

    def get_scores(self):
        return dict(self._scores)

    def get_sub_scores(self):
        return dict(self._sub_scores)

    def get_vector(self):
        return np.array([self._scores[c] for c in CHARACTERISTICS])


##
# Weighted sum of the five characteristic scores
#
# \param      scores   CharacteristicScores
# \param      weights  WeightVector or list of 5 weights
#
# \return     S_CEFW, real in [0, 1]
#
def score_comprehensive(scores, weights=None):
    if weights is None:
        weights = WeightVector()
    elif not isinstance(weights, WeightVector):
        weights = WeightVector(weights)
    return float(np.dot(weights.get_weights(), scores.get_vector()))
