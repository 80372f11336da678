##
# \file characteristic_scores_test.py
#  \brief  Unit tests for the characteristic and comprehensive scores
#


import unittest
import numpy as np

import wmbench.base.exceptions as exceptions
import wmbench.evaluation.characteristic_scores as cs
from wmbench.definitions import CHARACTERISTICS


class CharacteristicScoresTest(unittest.TestCase):

    def setUp(self):
        self.precision = 7
        self.scores = cs.CharacteristicScores(
            {"S_D": 1., "S_T": 0.5, "S_U": 0.9, "S_R": 0.6, "S_I": 0.2})

    def test_metric_scores(self):
        self.assertAlmostEqual(cs.score_detectability(0.998), 0.996,
                               places=self.precision)
        self.assertAlmostEqual(cs.score_double_degradation(6., 4.), 0.5,
                               places=self.precision)
        self.assertAlmostEqual(cs.score_detect_time(0.25), 0.75,
                               places=self.precision)
        self.assertEqual(cs.score_detect_time(2.), 0.)
        self.assertAlmostEqual(cs.score_robustness(0.99, 0.745), 0.5,
                               places=self.precision)
        self.assertAlmostEqual(cs.score_steal(0.75), 0.5,
                               places=self.precision)
        self.assertEqual(cs.score_steal(0.4), 1.)
        self.assertAlmostEqual(cs.score_usability(0.9, 0.6, 0.3), 0.6,
                               places=self.precision)
        self.assertRaises(exceptions.InvalidParameter,
                          cs.score_detect_time, -1.)

    def test_imperceptibility_scenarios(self):
        steal_scores = [0.1, 0.4, 0.7, 1.]
        self.assertAlmostEqual(
            cs.score_imperceptibility(steal_scores, "A"), 0.1,
            places=self.precision)
        self.assertAlmostEqual(
            cs.score_imperceptibility(steal_scores, "NA"), 0.55,
            places=self.precision)
        self.assertAlmostEqual(
            cs.aggregate_steal_aucroc([0.6, 0.9, 0.7, 0.8], "A"), 0.9,
            places=self.precision)
        self.assertAlmostEqual(
            cs.aggregate_steal_aucroc([0.6, 0.9, 0.7, 0.8], "NA"), 0.75,
            places=self.precision)

        self.assertRaises(exceptions.InvalidParameter,
                          cs.score_imperceptibility, steal_scores, "B")
        self.assertRaises(exceptions.InvalidParameter,
                          cs.score_imperceptibility, [0.1, 0.2], "A")

    def test_weight_vector(self):
        weights = cs.WeightVector()
        self.assertAlmostEqual(weights.get_weights().sum(), 1.,
                               places=self.precision)
        self.assertAlmostEqual(weights.get_weight("S_R"), 0.25,
                               places=self.precision)
        self.assertEqual(sorted(weights.to_dict().keys()),
                         sorted(CHARACTERISTICS))

        for invalid in [[0.2] * 4, [0.5, 0.5, 0.5, -0.5, 0.],
                        [0.3, 0.3, 0.3, 0.3, 0.3]]:
            self.assertRaises(exceptions.InvalidWeights,
                              cs.WeightVector, invalid)

    def test_characteristic_scores(self):
        np.testing.assert_array_almost_equal(
            self.scores.get_vector(), [1., 0.5, 0.9, 0.6, 0.2],
            decimal=self.precision)
        self.assertRaises(exceptions.InvalidParameter,
                          cs.CharacteristicScores, {"S_D": 1.})
        self.assertRaises(exceptions.InvalidParameter,
                          cs.CharacteristicScores,
                          {"S_D": 1.2, "S_T": 0.5, "S_U": 0.9, "S_R": 0.6,
                           "S_I": 0.2})
        self.assertRaises(exceptions.InvalidParameter,
                          cs.CharacteristicScores,
                          self.scores.get_scores(), {"S_MC": -0.1})

    def test_comprehensive_score(self):
        self.assertAlmostEqual(
            cs.score_comprehensive(self.scores, [0.2] * 5), 0.64,
            places=self.precision)

        expected = 1. / 6 * (1. + 0.5 + 0.9) + 0.25 * (0.6 + 0.2)
        self.assertAlmostEqual(
            cs.score_comprehensive(self.scores), expected,
            places=self.precision)
        self.assertAlmostEqual(
            cs.score_comprehensive(
                self.scores, cs.WeightVector([1., 0., 0., 0., 0.])), 1.,
            places=self.precision)

    def test_comprehensive_score_is_monotone(self):
        rng = np.random.default_rng(3)
        for i in range(1000):
            if i % 2 == 0:
                weights = cs.WeightVector()
            else:
                weights = cs.WeightVector(rng.dirichlet(np.ones(5)).tolist())

            values = rng.random(5)
            improved = values.copy()
            k = rng.integers(0, 5)
            improved[k] = min(1., improved[k] + rng.random())

            score = cs.score_comprehensive(cs.CharacteristicScores(
                dict(zip(CHARACTERISTICS, values.tolist()))), weights)
            score_improved = cs.score_comprehensive(cs.CharacteristicScores(
                dict(zip(CHARACTERISTICS, improved.tolist()))), weights)
            self.assertGreaterEqual(score_improved, score - 1e-12)
