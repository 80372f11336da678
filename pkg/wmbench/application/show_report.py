##
# \file show_report.py
# \brief      Print a written CEFW report together with the run manifest
#

import os

import pysitk.python_helper as ph

import wmbench.evaluation.cefw_evaluator as ce
import wmbench.utilities.run_directory as rd
import wmbench.utilities.run_manifest as rm
from wmbench.utilities.application_runner import run_application
from wmbench.utilities.input_arparser import InputArgparser
from wmbench.definitions import CHARACTERISTICS


def get_parser():
    input_parser = InputArgparser(
        description="Print the CEFW report and the manifest of an output "
        "directory.",
    )
    input_parser.add_dir_output(required=True)
    input_parser.add_verbose()
    return input_parser


def print_report(report, verbose=False):
    ph.print_subtitle("%s (scenario %s)" % (
        report.get_setting(), report.to_dict()["scenario"]))
    dataframe = report.get_dataframe()
    columns = ["scheme"] + CHARACTERISTICS + [ce.COMPREHENSIVE]
    if verbose:
        columns += [c for c in dataframe.columns
                    if c not in columns + ["setting"]]
    print(dataframe[columns].to_string(
        index=False, float_format=lambda x: "%.3f" % x))
    ph.print_info("Ranking: %s" % ", ".join(report.get_ranking()))

    for cell in report.get_flagged_cells():
        ph.print_warning(
            "%s %s: reproduced %.4f, reference %.4f (deviation %.4f)" % (
                cell["scheme"], cell["cell"], cell["reproduced"],
                cell["reference"], cell["deviation"]))


def print_manifest(manifest):
    ph.print_subtitle("Manifest (config hash %s)" % manifest.get_config_hash())
    for stage, entry in sorted(manifest.get_stages().items()):
        ph.print_info("%s: finished %s, %.2f s" % (
            stage, entry["finished"],
            entry["timings_seconds"].get("total", 0.)))
    ph.print_info("%d artifacts" % len(manifest.get_artifacts()))
    for name in manifest.get_inconsistent_artifacts():
        ph.print_warning("Artifact '%s' changed or removed" % name)


def run(dir_output, verbose):
    run_directory = rd.RunDirectory(dir_output)
    reports = ce.read_reports_json(run_directory.get_path_to_report_json())

    ph.print_title("CEFW report")
    for report in reports:
        print_report(report, verbose=verbose)

    manifest = rm.RunManifest.read(dir_output)
    if ph.file_exists(manifest.get_path_to_file()):
        print_manifest(manifest)
    return reports


def main(argv=None):
    input_parser = get_parser()
    args = input_parser.parse_args(argv)

    def function():
        run(args.dir_output, bool(args.verbose))

    return run_application(function)


if __name__ == '__main__':
    main()
