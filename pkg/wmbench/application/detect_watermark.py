##
# \file detect_watermark.py
# \brief      Detect the watermark of each scheme in its watermarked texts and
#             in the unwatermarked texts
#
# Writes per-text scores and the ROC curve of every scheme and records
# AUCROC and the detection time per text in the metric store.
#

import os

import pysitk.python_helper as ph

import wmbench.base.data_writer as dw
import wmbench.base.exceptions as exceptions
import wmbench.detection.detection_evaluator as de
import wmbench.detection.green_token_detector as gtd
import wmbench.evaluation.metric_store as ms
import wmbench.utilities.run_config as rc
import wmbench.utilities.run_directory as rd
import wmbench.utilities.run_manifest as rm
from wmbench.utilities.application_runner import run_application
from wmbench.utilities.input_arparser import InputArgparser


##
# Detector of a scheme restored from its sidecar
#
def get_detector(run_directory, label, vocabulary_size, verbose=False):
    config, sidecar_vocabulary_size, select_function = \
        run_directory.read_sidecar(label)
    if sidecar_vocabulary_size != vocabulary_size:
        raise exceptions.UnsupportedFileFormat(
            run_directory.get_path_to_sidecar(label),
            "vocabulary size %d does not match model (%d)" % (
                sidecar_vocabulary_size, vocabulary_size))
    return gtd.GreenTokenDetector(
        config, vocabulary_size, select_function, verbose=verbose)


def get_parser():
    input_parser = InputArgparser(
        description="Detect watermarks in generated texts and compute "
        "AUCROC and TPR at a fixed FPR.",
    )
    input_parser.add_schemes()
    input_parser.add_fpr_cap()
    input_parser.add_z_threshold()
    input_parser.add_seed(required=True)
    input_parser.add_dir_output(required=True)
    input_parser.add_log_config()
    input_parser.add_verbose()
    return input_parser


def run(config, verbose, log_files=()):
    time_start = ph.start_timing()
    run_directory = rd.RunDirectory(config.dir_output)

    model = run_directory.read_model()
    vocabulary = model.get_vocabulary()
    vocabulary_size = model.get_vocabulary_size()
    metric_store = run_directory.read_metrics()

    clean_texts = run_directory.read_texts(
        run_directory.get_path_to_texts(rd.CLEAN), vocabulary)

    artifacts = []
    timings = {}
    curves = {}
    for label in config.schemes:
        ph.print_title("Detect %s" % label)
        detector = get_detector(run_directory, label, vocabulary_size)
        watermarked_texts = run_directory.read_texts(
            run_directory.get_path_to_texts(label), vocabulary)

        evaluator = de.DetectionEvaluator(
            detector, watermarked_texts, clean_texts,
            fpr_cap=config.fpr_cap,
            z_threshold=config.z_threshold,
            verbose=verbose)
        evaluator.run()
        curves[label] = evaluator.get_roc_curve()
        timings[label] = evaluator.get_detect_time() * len(watermarked_texts)

        path_to_scores = run_directory.get_path_to_scores(label)
        path_to_roc = run_directory.get_path_to_roc(label)
        path_to_summary = run_directory.get_path_to_roc_summary(label)
        results = evaluator.get_results_positives() + \
            evaluator.get_results_negatives()
        labels = [1] * len(watermarked_texts) + [0] * len(clean_texts)
        dw.ScoreWriter.write_scores(
            results, labels, path_to_scores, verbose=verbose)
        dw.ScoreWriter.write_roc(
            evaluator.get_roc_curve(), path_to_roc, path_to_summary,
            summary=evaluator.get_summary(), verbose=verbose)
        artifacts.extend([path_to_scores, path_to_roc, path_to_summary])

        metric_store.set_metric(label, ms.METRIC_AUCROC, evaluator.get_auc())
        metric_store.set_metric(
            label, ms.METRIC_DETECT_TIME, evaluator.get_detect_time())

    path_to_metrics = run_directory.get_path_to_metrics()
    metric_store.write(path_to_metrics, verbose=verbose)
    artifacts.append(path_to_metrics)

    elapsed_time = ph.stop_timing(time_start)
    timings["total"] = elapsed_time.total_seconds()

    manifest = rm.RunManifest.read(config.dir_output)
    manifest.add_stage("detect", config.get_hash(), timings,
                       artifacts + list(log_files))
    manifest.write(verbose=verbose)

    ph.print_title("Summary")
    for label in config.schemes:
        ph.print_info("%s: AUCROC %.4f" % (label, curves[label].get_auc()))
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
        run(config, bool(args.verbose), log_files)

    return run_application(function)


if __name__ == '__main__':
    main()
