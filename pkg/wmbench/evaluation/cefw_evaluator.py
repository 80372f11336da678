##
# \file cefw_evaluator.py
# \brief      Turns raw metrics of watermark schemes into characteristic
#             scores and the weighted comprehensive score
#
# Default normalization per metric:
#   aucroc             Original bounds (1, 0.5)              -> S_D
#   ppl                Comparison, double degradation        -> S_T
#   memory             Comparison, double degradation        -> S_MC
#   generate_time      Comparison, double degradation        -> S_GT
#   detect_time        Original bounds (0 s, 1 s) per text   -> S_DT
#   aucroc_scrubbed    Comparison, detectability floor       -> S_R
#   aucroc_steal<n>    Original bounds (0.5, 1)              -> S_STEAL<n>
# Preset bounds given as overrides replace the default of a metric.
#

import natsort
import pandas as pd

import pysitk.python_helper as ph

import wmbench
import wmbench.base.exceptions as exceptions
import wmbench.evaluation.normalization as nrm
import wmbench.evaluation.metric_store as ms
import wmbench.evaluation.characteristic_scores as cs
from wmbench.definitions import CHARACTERISTICS
from wmbench.definitions import DEFAULT_SCENARIO
from wmbench.definitions import ORIGINAL
from wmbench.definitions import REFERENCE_TOLERANCE
from wmbench.definitions import STEAL_NS

COMPREHENSIVE = "S_CEFW"

# Metric keys accepted as bounds overrides
OVERRIDABLE_METRICS = [
    ms.METRIC_AUCROC,
    ms.METRIC_PPL,
    ms.METRIC_MEMORY,
    ms.METRIC_GENERATE_TIME,
    ms.METRIC_DETECT_TIME,
    ms.METRIC_AUCROC_SCRUBBED,
    ms.METRIC_AUCROC_STEAL,
]


##
# Convert bounds overrides {metric: [upper, lower]} into Preset bounds
#
def parse_bounds_overrides(overrides):
    if overrides is None:
        return {}
    bounds = {}
    for metric, values in overrides.items():
        if metric not in OVERRIDABLE_METRICS:
            raise exceptions.InvalidParameter(
                "bounds override for unknown metric '%s' (allowed: %s)" % (
                    metric, OVERRIDABLE_METRICS))
        if len(values) != 2 or values[0] == values[1]:
            raise exceptions.InvalidParameter(
                "bounds override of '%s' must be [upper, lower] with "
                "upper != lower" % metric)
        bounds[metric] = nrm.BoundsSpec.preset(values[0], values[1])
    return bounds


class CefwReport(object):

    ##
    # \param      self                  The object
    # \param      setting               name of evaluated setting, e.g.
    #                                   'OPT-2.7b/C4' or 'live'
    # \param      weights               WeightVector
    # \param      scenario              'A' or 'NA'
    # \param      results               per-scheme result dictionaries
    # \param      reference_comparison  list of compared reference cells
    #
    def __init__(self, setting, weights, scenario, results,
                 reference_comparison=None):
        self._setting = setting
        self._weights = weights
        self._scenario = scenario
        self._results = results
        self._reference_comparison = [] if reference_comparison is None \
            else reference_comparison

    def get_setting(self):
        return self._setting

    def get_schemes(self):
        return [r["scheme"] for r in self._results]

    def get_result(self, scheme):
        for result in self._results:
            if result["scheme"] == scheme:
                return result
        raise exceptions.MissingMetric(scheme, {COMPREHENSIVE: ["result"]})

    def get_score(self, scheme, characteristic):
        result = self.get_result(scheme)
        if characteristic == COMPREHENSIVE:
            return result[COMPREHENSIVE]
        return result["scores"][characteristic]

    def get_reference_comparison(self):
        return self._reference_comparison

    def get_flagged_cells(self):
        return [c for c in self._reference_comparison if c["flagged"]]

    ##
    # Schemes ordered by descending comprehensive score
    #
    def get_ranking(self):
        schemes = natsort.natsorted(self.get_schemes())
        return sorted(schemes,
                      key=lambda s: -self.get_result(s)[COMPREHENSIVE])

    def to_dict(self):
        return {
            "setting": self._setting,
            "scenario": self._scenario,
            "weights": self._weights.to_dict(),
            "ranking": self.get_ranking(),
            "schemes": self._results,
            "reference_comparison": self._reference_comparison,
        }

    @classmethod
    def from_dict(cls, dic):
        weights = cs.WeightVector(
            [dic["weights"][c] for c in CHARACTERISTICS])
        return cls(dic["setting"], weights, dic["scenario"], dic["schemes"],
                   dic.get("reference_comparison"))

    ##
    # One row per scheme with characteristic, sub- and comprehensive scores
    #
    def get_dataframe(self):
        rows = []
        for result in self._results:
            row = {"setting": self._setting, "scheme": result["scheme"]}
            row.update(result["scores"])
            row[COMPREHENSIVE] = result[COMPREHENSIVE]
            row["S_D_raw_aucroc"] = result["metrics"][ms.METRIC_AUCROC]
            row.update(result["sub_scores"])
            rows.append(row)
        columns = ["setting", "scheme"] + CHARACTERISTICS + \
            [COMPREHENSIVE, "S_D_raw_aucroc"]
        dataframe = pd.DataFrame(rows)
        others = [c for c in dataframe.columns if c not in columns]
        return dataframe[columns + others]


##
# Write reports of one or several settings as JSON
#
def write_reports_json(reports, path_to_file, verbose=True):
    dic = {
        "tool": "wmbench",
        "version": wmbench.__version__,
        "reports": [r.to_dict() for r in reports],
    }
    ph.write_dictionary_to_json(dic, path_to_file, verbose=verbose)


##
# Read reports written by write_reports_json
#
# \return     list of CefwReport
#
def read_reports_json(path_to_file):
    if not ph.file_exists(path_to_file):
        raise exceptions.FileNotExistent(path_to_file)
    dic = ph.read_dictionary_from_json(path_to_file)
    if dic.get("tool") != "wmbench" or "reports" not in dic:
        raise exceptions.UnsupportedFileFormat(
            path_to_file, "not a wmbench report")
    return [CefwReport.from_dict(d) for d in dic["reports"]]


def write_reports_csv(reports, path_to_file, verbose=True):
    dataframe = pd.concat([r.get_dataframe() for r in reports],
                          ignore_index=True)
    dataframe.to_csv(path_to_file, index=False, float_format="%.6f")
    if verbose:
        ph.print_info("File written to '%s'" % path_to_file)


class CefwEvaluator(object):

    ##
    # \param      self              The object
    # \param      metric_store      MetricStore with the scheme populations
    #                               and the 'Original' baseline
    # \param      schemes           labels of evaluated schemes; all
    #                               populations besides 'Original' if None
    # \param      weights           WeightVector
    # \param      scenario          'A' or 'NA'
    # \param      bounds_overrides  dictionary metric -> [upper, lower]
    # \param      reference         optional dictionary scheme ->
    #                               {characteristic or 'S_CEFW': value}
    # \param      setting           name of the setting
    # \param      verbose           print results
    #
    def __init__(self, metric_store,
                 schemes=None,
                 weights=None,
                 scenario=DEFAULT_SCENARIO,
                 bounds_overrides=None,
                 reference=None,
                 setting="live",
                 tolerance=REFERENCE_TOLERANCE,
                 verbose=False,
                 ):
        self._metric_store = metric_store
        if schemes is None:
            schemes = [p for p in metric_store.get_populations()
                       if p != ORIGINAL]
        self._schemes = schemes
        self._weights = cs.WeightVector() if weights is None else weights
        cs.check_scenario(scenario)
        self._scenario = scenario
        self._bounds_overrides = parse_bounds_overrides(bounds_overrides)
        self._reference = reference
        self._setting = setting
        self._tolerance = tolerance
        self._verbose = verbose

        self._report = None
        self._computational_time = ph.get_zero_time()

    def get_report(self):
        if self._report is None:
            raise exceptions.ObjectNotCreated("run")
        return self._report

    def get_computational_time(self):
        return self._computational_time

    def run(self):
        time_start = ph.start_timing()

        if len(self._schemes) == 0:
            raise exceptions.EmptyScoreSet("list of schemes to evaluate")
        results = [self._evaluate_scheme(s) for s in self._schemes]

        comparison = []
        if self._reference is not None:
            comparison = self._compare_with_reference(results)

        self._report = CefwReport(
            self._setting, self._weights, self._scenario, results,
            comparison)
        self._computational_time = ph.stop_timing(time_start)

        if self._verbose:
            self._print_report()

    def _get_bounds(self, metric, default):
        return self._bounds_overrides.get(metric, default)

    ##
    # Collect the raw metrics of a scheme and report every characteristic
    # lacking inputs at once
    #
    def _get_inputs(self, scheme):
        store = self._metric_store
        required = {
            "S_D": [(scheme, ms.METRIC_AUCROC)],
            "S_T": [(scheme, ms.METRIC_PPL)],
            "S_U": [(scheme, ms.METRIC_MEMORY),
                    (scheme, ms.METRIC_GENERATE_TIME),
                    (scheme, ms.METRIC_DETECT_TIME)],
            "S_R": [(scheme, ms.METRIC_AUCROC_SCRUBBED)],
            "S_I": [(scheme, ms.get_steal_metric(n)) for n in STEAL_NS],
        }
        for characteristic, metric in [
                ("S_T", ms.METRIC_PPL),
                ("S_U", ms.METRIC_MEMORY),
                ("S_U", ms.METRIC_GENERATE_TIME)]:
            if metric not in self._bounds_overrides:
                required[characteristic].append((ORIGINAL, metric))

        missing = {}
        for characteristic, entries in required.items():
            for population, metric in entries:
                if not store.has_metric(population, metric):
                    missing.setdefault(characteristic, []).append(
                        "%s.%s" % (population, metric))

        if ms.METRIC_AUCROC_SCRUBBED not in self._bounds_overrides and \
                not store.has_metric(scheme, ms.METRIC_AUCROC_NO_ATTACK) and \
                not store.has_metric(scheme, ms.METRIC_AUCROC):
            missing.setdefault("S_R", []).append(
                "%s.%s" % (scheme, ms.METRIC_AUCROC_NO_ATTACK))

        if len(missing) > 0:
            raise exceptions.MissingMetric(scheme, missing)

        metrics = store.get_values(scheme)
        provenance = {m: store.get_provenance(scheme, m) for m in metrics}
        baseline = store.get_values(ORIGINAL)
        for metric, value in baseline.items():
            metrics["%s.%s" % (ORIGINAL, metric)] = value
            provenance["%s.%s" % (ORIGINAL, metric)] = \
                store.get_provenance(ORIGINAL, metric)

        return metrics, baseline, provenance

    def _evaluate_scheme(self, scheme):
        metrics, baseline, provenance = self._get_inputs(scheme)
        bounds = {}

        def double_degradation(metric):
            if metric in self._bounds_overrides:
                return self._bounds_overrides[metric]
            return nrm.BoundsSpec.comparison(
                baseline[metric], "double-degradation")

        bounds[ms.METRIC_AUCROC] = self._get_bounds(
            ms.METRIC_AUCROC, cs.BOUNDS_AUCROC)
        bounds[ms.METRIC_PPL] = double_degradation(ms.METRIC_PPL)
        bounds[ms.METRIC_MEMORY] = double_degradation(ms.METRIC_MEMORY)
        bounds[ms.METRIC_GENERATE_TIME] = double_degradation(
            ms.METRIC_GENERATE_TIME)
        bounds[ms.METRIC_DETECT_TIME] = self._get_bounds(
            ms.METRIC_DETECT_TIME, cs.BOUNDS_DETECT_TIME)
        bounds[ms.METRIC_AUCROC_STEAL] = self._get_bounds(
            ms.METRIC_AUCROC_STEAL, cs.BOUNDS_STEAL)

        if ms.METRIC_AUCROC_SCRUBBED in self._bounds_overrides:
            bounds[ms.METRIC_AUCROC_SCRUBBED] = \
                self._bounds_overrides[ms.METRIC_AUCROC_SCRUBBED]
        else:
            auc_before = metrics.get(
                ms.METRIC_AUCROC_NO_ATTACK, metrics.get(ms.METRIC_AUCROC))
            bounds[ms.METRIC_AUCROC_SCRUBBED] = nrm.BoundsSpec.comparison(
                auc_before, "detectability-floor")

        sub_scores = {
            "S_MC": bounds[ms.METRIC_MEMORY].normalize(
                metrics[ms.METRIC_MEMORY]),
            "S_GT": bounds[ms.METRIC_GENERATE_TIME].normalize(
                metrics[ms.METRIC_GENERATE_TIME]),
            "S_DT": bounds[ms.METRIC_DETECT_TIME].normalize(
                metrics[ms.METRIC_DETECT_TIME]),
        }
        steal_aucs = [metrics[ms.get_steal_metric(n)] for n in STEAL_NS]
        for n, auc in zip(STEAL_NS, steal_aucs):
            sub_scores["S_STEAL%d" % n] = \
                bounds[ms.METRIC_AUCROC_STEAL].normalize(auc)

        scores = {
            "S_D": bounds[ms.METRIC_AUCROC].normalize(
                metrics[ms.METRIC_AUCROC]),
            "S_T": bounds[ms.METRIC_PPL].normalize(metrics[ms.METRIC_PPL]),
            "S_U": cs.score_usability(
                sub_scores["S_MC"], sub_scores["S_GT"], sub_scores["S_DT"]),
            "S_R": bounds[ms.METRIC_AUCROC_SCRUBBED].normalize(
                metrics[ms.METRIC_AUCROC_SCRUBBED]),
            "S_I": cs.score_imperceptibility(
                [sub_scores["S_STEAL%d" % n] for n in STEAL_NS],
                self._scenario),
        }
        characteristic_scores = cs.CharacteristicScores(scores, sub_scores)
        metrics["aucroc_steal_%s" % self._scenario] = \
            cs.aggregate_steal_aucroc(steal_aucs, self._scenario)

        return {
            "scheme": scheme,
            "scores": characteristic_scores.get_scores(),
            "sub_scores": characteristic_scores.get_sub_scores(),
            COMPREHENSIVE: cs.score_comprehensive(
                characteristic_scores, self._weights),
            "metrics": metrics,
            "provenance": provenance,
            "bounds": {m: b.to_dict() for m, b in bounds.items()},
        }

    ##
    # Compare reproduced cells with the reference table.
    #
    # S_D cells are additionally compared with the raw AUCROC since the
    # reference table may list the raw value instead of the score.
    #
    def _compare_with_reference(self, results):
        comparison = []
        for result in results:
            reference = self._reference.get(result["scheme"], {})
            for cell in CHARACTERISTICS + [COMPREHENSIVE]:
                if cell not in reference:
                    continue
                if cell == COMPREHENSIVE:
                    reproduced = result[COMPREHENSIVE]
                else:
                    reproduced = result["scores"][cell]
                deviation = abs(reproduced - reference[cell])
                entry = {
                    "scheme": result["scheme"],
                    "cell": cell,
                    "reference": reference[cell],
                    "reproduced": reproduced,
                    "deviation": deviation,
                    "flagged": bool(deviation > self._tolerance),
                }
                if cell == "S_D":
                    entry["matches_raw_aucroc"] = bool(abs(
                        result["metrics"][ms.METRIC_AUCROC] -
                        reference[cell]) <= self._tolerance)
                comparison.append(entry)

        n_flagged = len([c for c in comparison if c["flagged"]])
        if n_flagged > 0:
            ph.print_warning(
                "%s: %d of %d reference cells deviate by more than %g" % (
                    self._setting, n_flagged, len(comparison),
                    self._tolerance))
        return comparison

    def _print_report(self):
        ph.print_subtitle("CEFW scores (%s, scenario %s)" % (
            self._setting, self._scenario))
        dataframe = self._report.get_dataframe()
        columns = ["scheme"] + CHARACTERISTICS + [COMPREHENSIVE]
        print(dataframe[columns].to_string(
            index=False, float_format=lambda x: "%.3f" % x))
        ph.print_info("Ranking: %s" % ", ".join(self._report.get_ranking()))
