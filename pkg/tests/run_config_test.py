##
# \file run_config_test.py
#  \brief  Unit tests for run configuration, argument parsing, manifest and
#          exit codes of the command line tools
#


import io
import os
import unittest

import pysitk.python_helper as ph

import wmbench.base.exceptions as exceptions
import wmbench.application.detect_watermark as detect_watermark
import wmbench.utilities.application_runner as ar
import wmbench.utilities.run_config as rc
import wmbench.utilities.run_manifest as rm
from wmbench.definitions import DIR_TMP
from wmbench.definitions import SCHEMES


class RunConfigTest(unittest.TestCase):

    def setUp(self):
        self.precision = 7
        self.dir_tmp = os.path.join(DIR_TMP, "wmbench_test_run_config")
        ph.create_directory(self.dir_tmp)

    def test_defaults(self):
        config = rc.RunConfig(seed=1)
        self.assertEqual(config.schemes, SCHEMES)
        self.assertEqual(config.n_samples, 200)
        self.assertEqual(config.get("scoring_split"), 5)
        self.assertEqual(len(config.get_watermark_configs()), len(SCHEMES))
        self.assertEqual(config.get_bounds_overrides(), {})
        self.assertRaises(AttributeError, getattr, config, "n_texts")

    def test_seed_is_mandatory(self):
        self.assertRaises(exceptions.InvalidParameter, rc.RunConfig)
        self.assertRaises(exceptions.InvalidParameter, rc.RunConfig,
                          seed=None)

    def test_invalid_fields(self):
        for kwargs in [{"n_samples": 0}, {"n_spoof": 0},
                       {"prompt_length": 0}, {"alpha": 0.},
                       {"fpr_cap": 1.}, {"schemes": []},
                       {"intensity": -1.}, {"scenario": "B"},
                       {"bounds_overrides": "{ppl"},
                       {"bounds_overrides": {"bleu": [1, 0]}},
                       {"unknown_field": 1}]:
            kwargs["seed"] = 1
            self.assertRaises(exceptions.InvalidParameter,
                              rc.RunConfig, **kwargs)

        self.assertRaises(exceptions.InvalidWatermarkConfig, rc.RunConfig,
                          seed=1, schemes=["KGW"])
        self.assertRaises(exceptions.InvalidWeights, rc.RunConfig,
                          seed=1, weights=[0.5] * 5)
        self.assertRaises(exceptions.InvalidParameter, rc.RunConfig,
                          seed=1, replace_rate=1.5)

    def test_bounds_overrides_from_string(self):
        config = rc.RunConfig(seed=1, bounds_overrides='{"ppl": [1, 10]}')
        self.assertEqual(config.bounds_overrides, {"ppl": [1, 10]})
        self.assertEqual(config.get_bounds_overrides()["ppl"].get_kind(),
                         "preset")

    def test_hash(self):
        config_1 = rc.RunConfig(seed=1, dir_output="a")
        config_2 = rc.RunConfig(seed=1, dir_output="b")
        config_3 = rc.RunConfig(seed=2, dir_output="a")
        self.assertEqual(config_1.get_hash(), config_2.get_hash())
        self.assertNotEqual(config_1.get_hash(), config_3.get_hash())
        self.assertEqual(len(config_1.get_hash()), 64)

    def test_parser_with_config_file(self):
        path_to_config = os.path.join(self.dir_tmp, "config.json")
        ph.write_dictionary_to_json({
            "seed": 3,
            "dir_output": self.dir_tmp,
            "fpr_cap": 0.05,
            "z_threshold": 3.,
            "schemes": ["UNIW", "KGW1"],
            "n_samples": 20,
            "verbose": False,
            "version": "0.0.0",
        }, path_to_config, verbose=False)

        input_parser = detect_watermark.get_parser()
        args = input_parser.parse_args(
            ["--config", path_to_config, "--fpr-cap", "0.1"])
        self.assertEqual(args.seed, 3)
        self.assertEqual(args.schemes, ["UNIW", "KGW1"])
        self.assertEqual(args.verbose, 0)
        self.assertAlmostEqual(args.z_threshold, 3., places=self.precision)
        # command line values override config file values
        self.assertAlmostEqual(args.fpr_cap, 0.1, places=self.precision)

        config = rc.RunConfig.from_args(args)
        self.assertEqual(config.seed, 3)
        self.assertAlmostEqual(config.fpr_cap, 0.1, places=self.precision)
        # option unknown to the detect tool keeps its default
        self.assertEqual(config.n_samples, 200)

        path_to_log = input_parser.log_config(
            os.path.abspath(detect_watermark.__file__))
        self.assertTrue(ph.file_exists(path_to_log))
        dic = ph.read_dictionary_from_json(path_to_log)
        self.assertEqual(dic["seed"], 3)
        self.assertEqual(dic["dir-output"], self.dir_tmp)
        self.assertNotIn("config", dic)

    def test_exit_codes(self):
        def fail_with(error):
            def function():
                raise error
            return function

        self.assertEqual(ar.run_application(lambda: None), ar.EXIT_SUCCESS)
        self.assertEqual(
            ar.run_application(fail_with(exceptions.InvalidParameter("x"))),
            ar.EXIT_CONFIGURATION_ERROR)
        self.assertEqual(
            ar.run_application(fail_with(exceptions.EmptyCorpus())),
            ar.EXIT_DATA_ERROR)

        exit_code = detect_watermark.main([
            "--seed", "1", "--dir-output", self.dir_tmp,
            "--schemes", "KGW", "--verbose", "0"])
        self.assertEqual(exit_code, ar.EXIT_CONFIGURATION_ERROR)

        exit_code = detect_watermark.main([
            "--seed", "1", "--dir-output",
            os.path.join(self.dir_tmp, "empty"), "--verbose", "0"])
        self.assertEqual(exit_code, ar.EXIT_DATA_ERROR)


class RunManifestTest(unittest.TestCase):

    def setUp(self):
        self.precision = 7
        self.dir_output = os.path.join(DIR_TMP, "wmbench_test_manifest")
        ph.create_directory(self.dir_output)

    def _write_file(self, filename, text):
        path_to_file = os.path.join(self.dir_output, filename)
        with io.open(path_to_file, "w") as f:
            f.write(text)
        return path_to_file

    def test_stages_and_artifacts(self):
        path_to_file = self._write_file("a.txt", u"a")
        manifest = rm.RunManifest(self.dir_output)
        manifest.add_stage("train", "hash", {"total": 1.5}, [path_to_file])
        manifest.write()

        manifest = rm.RunManifest.read(self.dir_output)
        self.assertEqual(manifest.get_config_hash(), "hash")
        self.assertEqual(
            manifest.get_stages()["train"]["timings_seconds"]["total"], 1.5)
        self.assertEqual(manifest.get_artifacts()["a.txt"]["stage"], "train")
        self.assertEqual(manifest.get_inconsistent_artifacts(), [])

        self._write_file("a.txt", u"b")
        self.assertEqual(manifest.get_inconsistent_artifacts(), ["a.txt"])

        self.assertRaises(exceptions.FileNotExistent, manifest.add_artifact,
                          os.path.join(self.dir_output, "void.txt"), "train")

    def test_foreign_manifest(self):
        dir_output = os.path.join(self.dir_output, "foreign")
        ph.create_directory(dir_output)
        ph.write_dictionary_to_json(
            {"tool": "other"}, os.path.join(dir_output, rm.MANIFEST_FILENAME),
            verbose=False)
        self.assertRaises(exceptions.UnsupportedFileFormat,
                          rm.RunManifest.read, dir_output)
