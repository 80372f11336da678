##
# \file detection_evaluator.py
# \brief      Class to evaluate a detector on a positive and a negative text
#             population
#

import numpy as np

import pysitk.python_helper as ph

import wmbench.base.exceptions as exceptions
import wmbench.detection.roc_analysis as roc
from wmbench.definitions import FPR_CAP
from wmbench.definitions import Z_THRESHOLD


class DetectionEvaluator(object):

    ##
    # \param      self         The object
    # \param      detector     GreenTokenDetector
    # \param      positives    list of TokenSequence expected to carry the
    #                          watermark (watermarked, scrubbed or spoofed)
    # \param      negatives    list of unwatermarked TokenSequence
    # \param      fpr_cap      FPR at which the TPR is reported
    # \param      z_threshold  threshold of the hard decision
    # \param      verbose      The verbose
    #
    def __init__(self, detector,
                 positives=None,
                 negatives=None,
                 fpr_cap=FPR_CAP,
                 z_threshold=Z_THRESHOLD,
                 verbose=False,
                 ):
        self._detector = detector
        self._positives = positives
        self._negatives = negatives
        self._fpr_cap = fpr_cap
        self._z_threshold = z_threshold
        self._verbose = verbose

        self._results_positives = None
        self._results_negatives = None
        self._curve = None
        self._detect_time = None

    def set_positives(self, positives):
        self._positives = positives

    def set_negatives(self, negatives):
        self._negatives = negatives

    def run(self):
        if self._positives is None or self._negatives is None:
            raise exceptions.ObjectNotCreated("set_positives/set_negatives")

        self._results_positives = self._detector.detect_corpus(
            self._positives)
        time_positives = self._detector.get_computational_time()
        self._detect_time = time_positives.total_seconds() / \
            max(len(self._positives), 1)

        self._results_negatives = self._detector.detect_corpus(
            self._negatives)
        self._curve = roc.roc_auc(
            self.get_scores_positives(), self.get_scores_negatives())

        if self._verbose:
            summary = self.get_summary()
            ph.print_info(
                "%s: AUCROC %.4f, TPR@%g%% FPR %.4f, detected %.3f at "
                "z >= %g" % (
                    self._detector.get_config().get_label(),
                    summary["auc"], 100 * self._fpr_cap,
                    summary["tpr_at_fpr"], summary["detection_rate"],
                    self._z_threshold))

    def _check_run(self):
        if self._curve is None:
            raise exceptions.ObjectNotCreated("run")

    def get_results_positives(self):
        self._check_run()
        return self._results_positives

    def get_results_negatives(self):
        self._check_run()
        return self._results_negatives

    def get_scores_positives(self):
        return np.array([r.get_z() for r in self._results_positives])

    def get_scores_negatives(self):
        return np.array([r.get_z() for r in self._results_negatives])

    def get_roc_curve(self):
        self._check_run()
        return self._curve

    def get_auc(self):
        return self.get_roc_curve().get_auc()

    ##
    # Wall time of detection in seconds per positive text
    #
    def get_detect_time(self):
        self._check_run()
        return self._detect_time

    def get_summary(self):
        self._check_run()
        detected = [r.is_watermarked(self._z_threshold)
                    for r in self._results_positives]
        false_alarms = [r.is_watermarked(self._z_threshold)
                        for r in self._results_negatives]
        return {
            "label": self._detector.get_config().get_label(),
            "auc": self._curve.get_auc(),
            "fpr_cap": self._fpr_cap,
            "tpr_at_fpr": roc.tpr_at_fpr(
                self.get_scores_positives(), self.get_scores_negatives(),
                self._fpr_cap),
            "z_threshold": self._z_threshold,
            "detection_rate": float(np.mean(detected)),
            "false_alarm_rate": float(np.mean(false_alarms)),
            "n_positives": len(self._results_positives),
            "n_negatives": len(self._results_negatives),
        }
