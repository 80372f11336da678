##
# \file roc_analysis.py
# \brief      ROC curves, AUCROC and TPR at a fixed FPR from detection scores
#             of watermarked (positive) and unwatermarked (negative) texts
#

import numpy as np
from scipy.stats import rankdata

import wmbench.base.exceptions as exceptions


class RocCurve(object):

    ##
    # \param      self        The object
    # \param      fpr         false positive rates, nondecreasing
    # \param      tpr         true positive rates, nondecreasing
    # \param      thresholds  thresholds of the points (decreasing)
    # \param      auc         area under the curve
    #
    def __init__(self, fpr, tpr, thresholds, auc):
        self._fpr = np.asarray(fpr, dtype=np.float64)
        self._tpr = np.asarray(tpr, dtype=np.float64)
        self._thresholds = np.asarray(thresholds, dtype=np.float64)
        self._auc = float(auc)

    def get_fpr(self):
        return self._fpr

    def get_tpr(self):
        return self._tpr

    def get_thresholds(self):
        return self._thresholds

    def get_auc(self):
        return self._auc

    def get_points(self):
        return list(zip(self._fpr.tolist(), self._tpr.tolist()))


def _check_scores(pos_scores, neg_scores):
    pos_scores = np.asarray(pos_scores, dtype=np.float64).reshape(-1)
    neg_scores = np.asarray(neg_scores, dtype=np.float64).reshape(-1)
    if pos_scores.size == 0:
        raise exceptions.EmptyScoreSet("positive score set")
    if neg_scores.size == 0:
        raise exceptions.EmptyScoreSet("negative score set")
    return pos_scores, neg_scores


##
# Sweep thresholds +inf and every observed score; a text counts as positive
# if its score is at least the threshold.
#
# \return     fpr, tpr and thresholds as numpy arrays
#
def _sweep(pos_scores, neg_scores):
    thresholds = np.concatenate([
        [np.inf], np.unique(np.concatenate([pos_scores, neg_scores]))[::-1]])
    tpr = np.array([np.mean(pos_scores >= t) for t in thresholds])
    fpr = np.array([np.mean(neg_scores >= t) for t in thresholds])
    return fpr, tpr, thresholds


##
# ROC curve with AUC computed as the Mann-Whitney statistic, i.e. the fraction
# of (positive, negative) pairs with the positive score ranked higher, ties
# counted 0.5.
#
# \param      pos_scores  scores of positives, non-empty
# \param      neg_scores  scores of negatives, non-empty
#
# \return     RocCurve
#
def roc_auc(pos_scores, neg_scores):
    pos_scores, neg_scores = _check_scores(pos_scores, neg_scores)
    n_pos = pos_scores.size
    n_neg = neg_scores.size

    ranks = rankdata(np.concatenate([pos_scores, neg_scores]))
    u_statistic = ranks[:n_pos].sum() - n_pos * (n_pos + 1) / 2.
    auc = u_statistic / (n_pos * n_neg)

    fpr, tpr, thresholds = _sweep(pos_scores, neg_scores)
    return RocCurve(fpr, tpr, thresholds, auc)


##
# Maximum TPR over thresholds whose FPR does not exceed the cap
#
# \param      pos_scores  scores of positives
# \param      neg_scores  scores of negatives
# \param      fpr_cap     0 < fpr_cap < 1
#
# \return     TPR, real in [0, 1]
#
def tpr_at_fpr(pos_scores, neg_scores, fpr_cap):
    if not 0 < fpr_cap < 1:
        raise exceptions.InvalidParameter(
            "FPR cap must lie in (0, 1) (got %g)" % fpr_cap)
    pos_scores, neg_scores = _check_scores(pos_scores, neg_scores)

    fpr, tpr, thresholds = _sweep(pos_scores, neg_scores)
    return float(tpr[fpr <= fpr_cap].max())
