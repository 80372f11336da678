##
# \file metric_store.py
# \brief      Raw metric values per population ('Original' or a scheme
#             label) together with their provenance
#
# Measured metrics are collected by the command line tools in metrics.json
# of the output directory; ingested fixture tables yield one store per
# (model, dataset) setting.
#

import natsort

import pysitk.python_helper as ph

import wmbench.base.exceptions as exceptions
from wmbench.definitions import STEAL_NS

PROVENANCE_MEASURED = "measured"
PROVENANCE_FIXTURE = "ingested fixture"
PROVENANCES = [PROVENANCE_MEASURED, PROVENANCE_FIXTURE]

METRIC_AUCROC = "aucroc"
METRIC_PPL = "ppl"
METRIC_GENERATE_TIME = "generate_time"
METRIC_DETECT_TIME = "detect_time"
METRIC_MEMORY = "memory"
METRIC_AUCROC_NO_ATTACK = "aucroc_no_attack"
METRIC_AUCROC_SCRUBBED = "aucroc_scrubbed"
METRIC_AUCROC_STEAL = "aucroc_steal"


def get_steal_metric(n):
    return "%s%d" % (METRIC_AUCROC_STEAL, n)


METRICS = [
    METRIC_AUCROC,
    METRIC_PPL,
    METRIC_GENERATE_TIME,
    METRIC_DETECT_TIME,
    METRIC_MEMORY,
    METRIC_AUCROC_NO_ATTACK,
    METRIC_AUCROC_SCRUBBED,
] + [get_steal_metric(n) for n in STEAL_NS]

# Metrics whose value depends on wall time
TIMING_METRICS = [METRIC_GENERATE_TIME, METRIC_DETECT_TIME]


class MetricStore(object):

    def __init__(self):
        self._metrics = {}

    def set_metric(self, population, metric, value,
                   provenance=PROVENANCE_MEASURED):
        if metric not in METRICS:
            raise exceptions.InvalidParameter(
                "unknown metric '%s'; known metrics: %s" % (metric, METRICS))
        if provenance not in PROVENANCES:
            raise exceptions.InvalidParameter(
                "provenance must be one of %s" % PROVENANCES)
        self._metrics.setdefault(population, {})[metric] = {
            "value": float(value),
            "provenance": provenance,
        }

    def has_metric(self, population, metric):
        return metric in self._metrics.get(population, {})

    def get_metric(self, population, metric):
        if not self.has_metric(population, metric):
            raise exceptions.MissingMetric(population, {metric: [metric]})
        return self._metrics[population][metric]["value"]

    def get_provenance(self, population, metric):
        return self._metrics[population][metric]["provenance"]

    def get_populations(self):
        return natsort.natsorted(self._metrics.keys())

    def get_values(self, population):
        return {m: e["value"]
                for m, e in self._metrics.get(population, {}).items()}

    def update(self, other):
        for population, entries in other.to_dict().items():
            for metric, entry in entries.items():
                self.set_metric(population, metric,
                                entry["value"], entry["provenance"])

    def to_dict(self):
        return {p: {m: dict(e) for m, e in entries.items()}
                for p, entries in self._metrics.items()}

    @classmethod
    def from_dict(cls, dic):
        store = cls()
        for population, entries in dic.items():
            for metric, entry in entries.items():
                store.set_metric(population, metric,
                                 entry["value"], entry["provenance"])
        return store

    def write(self, path_to_file, verbose=False):
        ph.write_dictionary_to_json(
            self.to_dict(), path_to_file, verbose=verbose)

    ##
    # Read store from JSON file; an absent file gives an empty store
    #
    @classmethod
    def read(cls, path_to_file):
        if not ph.file_exists(path_to_file):
            return cls()
        return cls.from_dict(ph.read_dictionary_from_json(path_to_file))
