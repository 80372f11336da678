##
# \file run_directory.py
# \brief      Layout of an output directory shared by the command line tools
#
# <dir_output>/
#   manifest.json, metrics.json, model.txt, scoring_model.txt
#   texts/clean.txt, texts/<label>.txt
#   sidecars/<label>.json
#   scores/<label>.csv, roc/<label>_roc.csv, roc/<label>_summary.json
#   attacked/<label>_scrubbed.txt, attacked/<label>_steal<n>.txt
#   attacked/tables/<label>_steal<n>_watermarked.txt,
#   attacked/tables/clean_steal<n>.txt
#   report.json, report.csv, plots/*.svg
#

import os

import wmbench.base.data_reader as dr
import wmbench.evaluation.metric_store as ms

CLEAN = "clean"


class RunDirectory(object):

    def __init__(self, dir_output):
        self._dir_output = dir_output

    def get_dir_output(self):
        return self._dir_output

    def _get_path(self, *names):
        return os.path.join(self._dir_output, *names)

    def get_path_to_metrics(self):
        return self._get_path("metrics.json")

    def get_path_to_model(self):
        return self._get_path("model.txt")

    def get_path_to_scoring_model(self):
        return self._get_path("scoring_model.txt")

    ##
    # \param      label  scheme label or 'clean'
    #
    def get_path_to_texts(self, label):
        return self._get_path("texts", "%s.txt" % label)

    def get_path_to_sidecar(self, label):
        return self._get_path("sidecars", "%s.json" % label)

    def get_path_to_scores(self, label):
        return self._get_path("scores", "%s.csv" % label)

    def get_path_to_roc(self, label):
        return self._get_path("roc", "%s_roc.csv" % label)

    def get_path_to_roc_summary(self, label):
        return self._get_path("roc", "%s_summary.json" % label)

    def get_path_to_scrubbed(self, label):
        return self._get_path("attacked", "%s_scrubbed.txt" % label)

    def get_path_to_spoofed(self, label, n):
        return self._get_path("attacked", "%s_steal%d.txt" % (label, n))

    def get_path_to_steal_table(self, label, n):
        if label == CLEAN:
            filename = "clean_steal%d.txt" % n
        else:
            filename = "%s_steal%d_watermarked.txt" % (label, n)
        return self._get_path("attacked", "tables", filename)

    def get_path_to_report_json(self):
        return self._get_path("report.json")

    def get_path_to_report_csv(self):
        return self._get_path("report.csv")

    def get_dir_plots(self):
        return self._get_path("plots")

    def read_model(self):
        reader = dr.NGramModelReader(self.get_path_to_model())
        reader.read_data()
        return reader.get_data()

    def read_scoring_model(self):
        reader = dr.NGramModelReader(self.get_path_to_scoring_model())
        reader.read_data()
        return reader.get_data()

    ##
    # \return     list of TokenSequence with role 'generated'
    #
    def read_texts(self, path_to_file, vocabulary):
        reader = dr.CorpusReader(path_to_file)
        reader.read_data()
        return reader.get_sequences(vocabulary)

    ##
    # \return     (config, vocabulary_size, select_function)
    #
    def read_sidecar(self, label):
        reader = dr.SidecarReader(self.get_path_to_sidecar(label))
        reader.read_data()
        return reader.get_data()

    def read_metrics(self):
        return ms.MetricStore.read(self.get_path_to_metrics())
