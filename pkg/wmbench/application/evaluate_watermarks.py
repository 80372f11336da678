##
# \file evaluate_watermarks.py
# \brief      Comprehensive evaluation (CEFW) of the watermark schemes from
#             measured metrics or from ingested fixture tables
#

import os

import pysitk.python_helper as ph

import wmbench.base.data_reader as dr
import wmbench.base.exceptions as exceptions
import wmbench.detection.roc_analysis as roc
import wmbench.evaluation.cefw_evaluator as ce
import wmbench.evaluation.report_plotter as rp
import wmbench.utilities.run_config as rc
import wmbench.utilities.run_directory as rd
import wmbench.utilities.run_manifest as rm
from wmbench.utilities.application_runner import run_application
from wmbench.utilities.input_arparser import InputArgparser

METRIC_SOURCES = ["live", "fixture"]


def get_parser():
    input_parser = InputArgparser(
        description="Compute characteristic scores and the demand weighted "
        "comprehensive score of watermark schemes.",
    )
    input_parser.add_metric_source()
    input_parser.add_dir_fixtures()
    input_parser.add_schemes()
    input_parser.add_scenario()
    input_parser.add_weights()
    input_parser.add_bounds_overrides()
    input_parser.add_plots()
    input_parser.add_seed(required=True)
    input_parser.add_dir_output(required=True)
    input_parser.add_log_config()
    input_parser.add_verbose()
    return input_parser


##
# ROC curves of the schemes from the score files of the detect command;
# schemes without score file are skipped
#
def read_roc_curves(run_directory, schemes):
    curves = {}
    for label in schemes:
        path_to_scores = run_directory.get_path_to_scores(label)
        if not ph.file_exists(path_to_scores):
            continue
        reader = dr.ScoreReader(path_to_scores)
        reader.read_data()
        dataframe = reader.get_data()
        curves[label] = roc.roc_auc(
            dataframe.loc[dataframe["label"] == 1, "z"].values,
            dataframe.loc[dataframe["label"] == 0, "z"].values)
    return curves


def evaluate_live(config, run_directory, verbose):
    evaluator = ce.CefwEvaluator(
        run_directory.read_metrics(),
        schemes=config.schemes,
        weights=config.get_weight_vector(),
        scenario=config.scenario,
        bounds_overrides=config.bounds_overrides,
        setting="live",
        verbose=verbose)
    evaluator.run()
    return [evaluator.get_report()]


##
# Evaluate every (model, dataset) setting of the fixture tables and compare
# with the reference comprehensive table
#
def evaluate_fixture(config, dir_fixtures, verbose):
    reader = dr.MetricFixtureReader(dir_fixtures)
    reader.read_data()
    reference = reader.get_reference()

    reports = []
    for setting, metric_store in reader.get_metric_stores().items():
        evaluator = ce.CefwEvaluator(
            metric_store,
            weights=config.get_weight_vector(),
            scenario=config.scenario,
            bounds_overrides=config.bounds_overrides,
            reference=reference.get(setting),
            setting=setting,
            verbose=verbose)
        evaluator.run()
        reports.append(evaluator.get_report())
    return reports


def run(config, metric_source, dir_fixtures, plots, verbose, log_files=()):
    time_start = ph.start_timing()
    run_directory = rd.RunDirectory(config.dir_output)

    if metric_source not in METRIC_SOURCES:
        raise exceptions.InvalidParameter(
            "metric source must be one of %s" % METRIC_SOURCES)

    ph.print_title("Comprehensive evaluation (%s metrics)" % metric_source)
    if metric_source == "live":
        reports = evaluate_live(config, run_directory, verbose)
    else:
        reports = evaluate_fixture(config, dir_fixtures, verbose)

    artifacts = [
        run_directory.get_path_to_report_json(),
        run_directory.get_path_to_report_csv(),
    ]
    ph.create_directory(config.dir_output)
    ce.write_reports_json(reports, artifacts[0], verbose=verbose)
    ce.write_reports_csv(reports, artifacts[1], verbose=verbose)

    if plots:
        plotter = rp.ReportPlotter(run_directory.get_dir_plots(),
                                   verbose=verbose)
        if metric_source == "live":
            curves = read_roc_curves(run_directory, config.schemes)
            if len(curves) > 0:
                plotter.plot_roc_curves(curves)
        for report in reports:
            plotter.plot_characteristic_scores(report)
            plotter.plot_ranking(report)
            plotter.plot_complexity_analysis(report)
        artifacts.extend(plotter.get_written_files())

    elapsed_time = ph.stop_timing(time_start)

    manifest = rm.RunManifest.read(config.dir_output)
    manifest.add_stage("evaluate", config.get_hash(),
                       {"total": elapsed_time.total_seconds()},
                       artifacts + list(log_files))
    manifest.write(verbose=verbose)

    ph.print_title("Summary")
    for report in reports:
        ph.print_info("%s: ranking %s" % (
            report.get_setting(), ", ".join(report.get_ranking())))
        n_flagged = len(report.get_flagged_cells())
        if n_flagged > 0:
            ph.print_info("%s: %d reference cells flagged" % (
                report.get_setting(), n_flagged))
    exe_file_info = os.path.basename(os.path.abspath(__file__)).split(".")[0]
    print("%s | Computational Time: %s" % (exe_file_info, elapsed_time))
    return reports


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
        run(config, args.metric_source, args.dir_fixtures, bool(args.plots),
            bool(args.verbose), log_files)

    return run_application(function)


if __name__ == '__main__':
    main()
