##
# \file normalization_test.py
#  \brief  Unit tests for metric normalization under the Original, Preset
#          and Comparison bounds principles
#


import unittest

import wmbench.base.exceptions as exceptions
import wmbench.evaluation.normalization as nrm


class NormalizationTest(unittest.TestCase):

    def setUp(self):
        self.precision = 7

    def test_normalize(self):
        self.assertAlmostEqual(nrm.normalize(0.75, 1., 0.5), 0.5,
                               places=self.precision)
        self.assertEqual(nrm.normalize(1.2, 1., 0.5), 1.)
        self.assertEqual(nrm.normalize(0.3, 1., 0.5), 0.)

    def test_normalize_smaller_is_better(self):
        self.assertAlmostEqual(nrm.normalize(6., 4., 8.), 0.5,
                               places=self.precision)
        self.assertEqual(nrm.normalize(3., 4., 8.), 1.)
        self.assertEqual(nrm.normalize(9., 4., 8.), 0.)

    def test_degenerate_bounds(self):
        self.assertRaises(exceptions.DegenerateBounds,
                          nrm.normalize, 1., 2., 2.)
        self.assertRaises(exceptions.DegenerateBounds,
                          nrm.BoundsSpec.preset, 3., 3.)

    def test_comparison_detectability_floor(self):
        bounds = nrm.BoundsSpec.comparison(0.9, "detectability-floor")
        self.assertEqual(bounds.get_kind(), "comparison")
        self.assertEqual(bounds.get_upper(), 0.9)
        self.assertEqual(bounds.get_lower(), 0.5)
        self.assertAlmostEqual(bounds.normalize(0.7), 0.5,
                               places=self.precision)
        self.assertRaises(exceptions.DegenerateBounds,
                          nrm.BoundsSpec.comparison, 0.5,
                          "detectability-floor")

    def test_comparison_double_degradation(self):
        bounds = nrm.BoundsSpec.comparison(4., "double-degradation")
        self.assertEqual(bounds.get_lower(), 8.)
        self.assertAlmostEqual(bounds.normalize(5.), 0.75,
                               places=self.precision)
        self.assertEqual(bounds.to_dict(), {
            "kind": "comparison", "upper": 4., "lower": 8.,
            "rule": "double-degradation", "baseline": 4.})
        self.assertRaises(exceptions.NonpositiveBaseline,
                          nrm.BoundsSpec.comparison, 0.,
                          "double-degradation")

    def test_invalid_kinds(self):
        self.assertRaises(exceptions.InvalidParameter,
                          nrm.BoundsSpec.comparison, 4., "halving")
        self.assertRaises(exceptions.InvalidParameter,
                          nrm.BoundsSpec, "relative", 1., 0.)
        self.assertEqual(nrm.BoundsSpec.original(1., 0.5).to_dict(),
                         {"kind": "original", "upper": 1., "lower": 0.5})
