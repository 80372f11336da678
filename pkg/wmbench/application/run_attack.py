##
# \file run_attack.py
# \brief      Attack the watermarked texts by scrubbing and the watermarks by
#             STEAL spoofing
#
# Scrubbing perturbs the first n_robustness watermarked texts (or paraphrases
# them by an external command). STEAL counts n-grams of n_steal_tables
# watermarked and unwatermarked texts and generates n_spoof spoofed texts
# per n = 1..4. AUCROCs of attacked against unwatermarked texts are recorded
# in the metric store.
#

import os

import pysitk.python_helper as ph

import wmbench.base.data_writer as dw
import wmbench.base.exceptions as exceptions
import wmbench.attack.scrubber as scr
import wmbench.attack.steal as steal
import wmbench.application.detect_watermark as detect_watermark
import wmbench.application.generate_texts as generate_texts
import wmbench.detection.detection_evaluator as de
import wmbench.evaluation.metric_store as ms
import wmbench.utilities.run_config as rc
import wmbench.utilities.run_directory as rd
import wmbench.utilities.run_manifest as rm
from wmbench.utilities.application_runner import run_application
from wmbench.utilities.input_arparser import InputArgparser
from wmbench.definitions import STEAL_NS

ATTACK_KINDS = ["scrub", "steal"]


def get_parser():
    input_parser = InputArgparser(
        description="Run scrubbing and STEAL spoofing attacks on the "
        "watermarked texts of each scheme.",
    )
    input_parser.add_kind()
    input_parser.add_corpus_prompts(required=False)
    input_parser.add_schemes()
    input_parser.add_n_robustness()
    input_parser.add_replace_rate()
    input_parser.add_delete_rate()
    input_parser.add_insert_rate()
    input_parser.add_paraphraser_command()
    input_parser.add_n_steal_tables()
    input_parser.add_n_spoof()
    input_parser.add_intensity()
    input_parser.add_max_tokens()
    input_parser.add_prompt_length()
    input_parser.add_temperature()
    input_parser.add_fpr_cap()
    input_parser.add_z_threshold()
    input_parser.add_seed(required=True)
    input_parser.add_dir_output(required=True)
    input_parser.add_log_config()
    input_parser.add_verbose()
    return input_parser


def _head(texts, n, name):
    if len(texts) < n:
        ph.print_warning("%s: %d texts available, %d requested" % (
            name, len(texts), n))
    return texts[:n]


class AttackRunner(object):

    def __init__(self, config, kinds, verbose=True):
        unknown = [k for k in kinds if k not in ATTACK_KINDS]
        if len(unknown) > 0:
            raise exceptions.InvalidParameter(
                "unknown attack kinds %s (allowed: %s)" % (
                    unknown, ATTACK_KINDS))
        if "steal" in kinds and config.corpus_prompts is None:
            raise exceptions.InvalidParameter(
                "STEAL attacks require a prompt corpus")

        self._config = config
        self._kinds = kinds
        self._verbose = verbose
        self._run_directory = rd.RunDirectory(config.dir_output)

        self._artifacts = []
        self._timings = {}
        self._prompts = None
        self._write_clean_tables = True

    def get_artifacts(self):
        return list(self._artifacts)

    def get_timings(self):
        return dict(self._timings)

    def run(self):
        config = self._config
        run_directory = self._run_directory

        self._model = run_directory.read_model()
        self._vocabulary = self._model.get_vocabulary()
        self._metric_store = run_directory.read_metrics()
        self._clean_texts = run_directory.read_texts(
            run_directory.get_path_to_texts(rd.CLEAN), self._vocabulary)

        if "steal" in self._kinds:
            self._prompts = generate_texts.read_prompts(
                config.corpus_prompts, self._vocabulary,
                config.prompt_length, config.n_spoof)

        for label in config.schemes:
            detector = detect_watermark.get_detector(
                run_directory, label, self._model.get_vocabulary_size())
            watermarked_texts = run_directory.read_texts(
                run_directory.get_path_to_texts(label), self._vocabulary)

            if "scrub" in self._kinds:
                self._run_scrub(label, detector, watermarked_texts)
            if "steal" in self._kinds:
                self._run_steal(label, detector, watermarked_texts)

        path_to_metrics = run_directory.get_path_to_metrics()
        self._metric_store.write(path_to_metrics, verbose=self._verbose)
        self._artifacts.append(path_to_metrics)

    def _get_evaluator(self, detector, positives):
        evaluator = de.DetectionEvaluator(
            detector, positives, self._clean_texts,
            fpr_cap=self._config.fpr_cap,
            z_threshold=self._config.z_threshold,
            verbose=self._verbose)
        evaluator.run()
        return evaluator

    def _get_scrubber(self):
        if self._config.paraphraser_command is not None:
            return scr.CommandLineParaphraser(
                self._vocabulary, self._config.paraphraser_command,
                verbose=self._verbose)
        return scr.TokenPerturbationScrubber(
            self._model, self._config.get_scrub_config(),
            verbose=self._verbose)

    def _run_scrub(self, label, detector, watermarked_texts):
        ph.print_title("Scrub texts watermarked by %s" % label)
        texts = _head(watermarked_texts, self._config.n_robustness, label)
        scrubber = self._get_scrubber()
        scrubbed = scrubber.scrub_corpus(texts, self._config.seed)
        self._timings["%s_scrub" % label] = \
            scrubber.get_computational_time().total_seconds()

        path_to_texts = self._run_directory.get_path_to_scrubbed(label)
        dw.CorpusWriter(scrubbed, path_to_texts, self._vocabulary,
                        verbose=self._verbose).write_data()
        self._artifacts.append(path_to_texts)

        auc_before = self._get_evaluator(detector, texts).get_auc()
        auc_after = self._get_evaluator(detector, scrubbed).get_auc()
        self._metric_store.set_metric(
            label, ms.METRIC_AUCROC_NO_ATTACK, auc_before)
        self._metric_store.set_metric(
            label, ms.METRIC_AUCROC_SCRUBBED, auc_after)
        ph.print_info("%s: AUCROC %.4f before and %.4f after scrubbing" % (
            label, auc_before, auc_after))

    def _run_steal(self, label, detector, watermarked_texts):
        config = self._config
        ph.print_title("STEAL attacks on %s" % label)
        time_start = ph.start_timing()
        tables = {}
        spoofed = steal.steal_suite(
            self._model,
            _head(watermarked_texts, config.n_steal_tables, label),
            _head(self._clean_texts, config.n_steal_tables, rd.CLEAN),
            self._prompts,
            config.seed,
            intensity=config.intensity,
            max_tokens=config.max_tokens,
            temperature=config.temperature,
            tables=tables,
            verbose=self._verbose)
        self._timings["%s_steal" % label] = \
            ph.stop_timing(time_start).total_seconds()

        for n in STEAL_NS:
            path_to_texts = self._run_directory.get_path_to_spoofed(label, n)
            path_to_table = self._run_directory.get_path_to_steal_table(
                label, n)
            dw.CorpusWriter(spoofed[n], path_to_texts, self._vocabulary,
                            verbose=self._verbose).write_data()
            dw.NGramTableWriter(tables[n][0], path_to_table,
                                verbose=self._verbose).write_data()
            self._artifacts.extend([path_to_texts, path_to_table])

            # the clean table does not depend on the scheme
            if self._write_clean_tables:
                path_to_table = self._run_directory.get_path_to_steal_table(
                    rd.CLEAN, n)
                dw.NGramTableWriter(tables[n][1], path_to_table,
                                    verbose=self._verbose).write_data()
                self._artifacts.append(path_to_table)

            auc = self._get_evaluator(detector, spoofed[n]).get_auc()
            self._metric_store.set_metric(
                label, ms.get_steal_metric(n), auc)
            ph.print_info("%s: AUCROC of STEAL-%d spoofed texts %.4f" % (
                label, n, auc))
        self._write_clean_tables = False


def run(config, kinds, verbose, log_files=()):
    time_start = ph.start_timing()

    attack_runner = AttackRunner(config, kinds, verbose=verbose)
    attack_runner.run()

    elapsed_time = ph.stop_timing(time_start)
    timings = attack_runner.get_timings()
    timings["total"] = elapsed_time.total_seconds()

    manifest = rm.RunManifest.read(config.dir_output)
    manifest.add_stage("attack", config.get_hash(), timings,
                       attack_runner.get_artifacts() + list(log_files))
    manifest.write(verbose=verbose)

    ph.print_title("Summary")
    exe_file_info = os.path.basename(os.path.abspath(__file__)).split(".")[0]
    print("%s | Computational Time: %s" % (exe_file_info, elapsed_time))


def main(argv=None):
    input_parser = get_parser()
    args = input_parser.parse_args(argv)
    if args.verbose:
        input_parser.print_arguments(args)

    def function():
        config = rc.RunConfig.from_args(args)
        log_files = []
        if args.log_config:
            log_files.append(
                input_parser.log_config(os.path.abspath(__file__)))
        run(config, args.kind, bool(args.verbose), log_files)

    return run_application(function)


if __name__ == '__main__':
    main()
