##
# \file roc_analysis_test.py
#  \brief  Unit tests for AUCROC and TPR at a fixed FPR
#


import unittest
import numpy as np

import wmbench.base.exceptions as exceptions
import wmbench.detection.roc_analysis as roc


class RocAnalysisTest(unittest.TestCase):

    def setUp(self):
        self.precision = 7

    def test_auc(self):
        self.assertAlmostEqual(
            roc.roc_auc([4, 5, 6], [1, 2, 3]).get_auc(), 1.,
            places=self.precision)
        self.assertAlmostEqual(
            roc.roc_auc([1, 2, 3], [4, 5, 6]).get_auc(), 0.,
            places=self.precision)
        self.assertAlmostEqual(
            roc.roc_auc([1, 1], [1, 1, 1]).get_auc(), 0.5,
            places=self.precision)
        self.assertAlmostEqual(
            roc.roc_auc([3, 1], [2]).get_auc(), 0.5,
            places=self.precision)

    def test_auc_matches_curve_area(self):
        rng = np.random.default_rng(0)
        pos_scores = rng.normal(1., 1., 50)
        neg_scores = rng.normal(0., 1., 60)
        curve = roc.roc_auc(pos_scores, neg_scores)
        fpr = curve.get_fpr()
        tpr = curve.get_tpr()
        area = np.sum(np.diff(fpr) * (tpr[1:] + tpr[:-1]) / 2.)
        self.assertAlmostEqual(curve.get_auc(), area, places=self.precision)

    def test_curve_endpoints(self):
        curve = roc.roc_auc([0.3, 2.5, 1.], [0.1, 1., -3.])
        points = curve.get_points()
        self.assertEqual(points[0], (0., 0.))
        self.assertEqual(points[-1], (1., 1.))
        self.assertTrue(np.isinf(curve.get_thresholds()[0]))
        self.assertTrue(np.all(np.diff(curve.get_fpr()) >= 0))
        self.assertTrue(np.all(np.diff(curve.get_tpr()) >= 0))

    def test_tpr_at_fpr(self):
        self.assertAlmostEqual(
            roc.tpr_at_fpr([2], [1, 3], 0.5), 1., places=self.precision)
        self.assertAlmostEqual(
            roc.tpr_at_fpr([2], [1, 3], 0.4), 0., places=self.precision)
        self.assertAlmostEqual(
            roc.tpr_at_fpr([5, 6, 0], [1, 2, 3, 4], 0.01), 2. / 3,
            places=self.precision)

    def test_tpr_at_fpr_cap_is_inclusive(self):
        # threshold 2 has FPR exactly 0.5 and is admissible at cap 0.5
        self.assertAlmostEqual(
            roc.tpr_at_fpr([2], [1, 3], 0.5), 1., places=self.precision)
        # an exclusive cap would discard it, leaving only TPR 0
        self.assertAlmostEqual(
            roc.tpr_at_fpr([2], [1, 3], 0.5 - 1e-9), 0.,
            places=self.precision)

    def test_auc_matches_pair_count(self):
        rng = np.random.default_rng(1)
        for i in range(50):
            n_pos, n_neg = rng.integers(1, 21, size=2)
            if i % 2 == 0:
                # integer scores to produce ties
                pos_scores = rng.integers(0, 6, n_pos).astype(float)
                neg_scores = rng.integers(0, 6, n_neg).astype(float)
            else:
                pos_scores = rng.normal(0.5, 1., n_pos)
                neg_scores = rng.normal(0., 1., n_neg)

            pairs = [1. if p > n else 0.5 if p == n else 0.
                     for p in pos_scores for n in neg_scores]
            auc = roc.roc_auc(pos_scores, neg_scores).get_auc()
            self.assertAlmostEqual(auc, np.mean(pairs), places=12)

            self.assertAlmostEqual(
                auc + roc.roc_auc(neg_scores, pos_scores).get_auc(), 1.,
                places=12)

            for transform in [np.arctan, lambda x: 3. * x - 7.]:
                self.assertAlmostEqual(
                    roc.roc_auc(transform(pos_scores),
                                transform(neg_scores)).get_auc(),
                    auc, places=12)

    def test_invalid_arguments(self):
        for fpr_cap in [0., 1., -0.1, 1.5]:
            self.assertRaises(exceptions.InvalidParameter,
                              roc.tpr_at_fpr, [1], [0], fpr_cap)
        self.assertRaises(exceptions.EmptyScoreSet, roc.roc_auc, [], [1])
        self.assertRaises(exceptions.EmptyScoreSet, roc.roc_auc, [1], [])
