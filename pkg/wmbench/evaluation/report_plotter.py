##
# \file report_plotter.py
# \brief      Static SVG plots of detection and CEFW results
#

import os
import re
import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import pandas as pd
import seaborn as sns
from natsort import natsorted

import pysitk.python_helper as ph

import wmbench.watermark.watermark_config as wc
from wmbench.definitions import CHARACTERISTICS
from wmbench.definitions import CHARACTERISTIC_NAMES

COMPREHENSIVE = "S_CEFW"


class ReportPlotter(object):

    def __init__(self, dir_output, verbose=False):
        self._dir_output = dir_output
        self._verbose = verbose
        self._written_files = []

    ##
    # Paths of all figures written so far
    #
    def get_written_files(self):
        return list(self._written_files)

    def _save(self, fig, filename):
        ph.create_directory(self._dir_output)
        path_to_file = os.path.join(self._dir_output, filename)
        ph.save_fig(fig, path_to_file)
        plt.close(fig)
        self._written_files.append(path_to_file)
        if self._verbose:
            ph.print_info("Figure written to '%s'" % path_to_file)
        return path_to_file

    @staticmethod
    def _get_suffix(setting):
        if setting is None:
            return ""
        return "_%s" % re.sub("[^0-9a-zA-Z.-]+", "_", setting)

    ##
    # ROC curves of all schemes in one figure
    #
    # \param      self    The object
    # \param      curves  dictionary label -> RocCurve
    #
    def plot_roc_curves(self, curves, filename="roc_curves.svg"):
        fig = plt.figure(figsize=(6, 6))
        ax = fig.add_subplot(1, 1, 1)
        for label in natsorted(curves.keys()):
            curve = curves[label]
            ax.step(curve.get_fpr(), curve.get_tpr(), where="post",
                    label="%s (AUC %.3f)" % (label, curve.get_auc()))
        ax.plot([0, 1], [0, 1], color="gray", linestyle=":")
        ax.set_xlim([0, 1])
        ax.set_ylim([0, 1.01])
        ax.set_xlabel("False positive rate")
        ax.set_ylabel("True positive rate")
        ax.legend(loc="lower right")
        return self._save(fig, filename)

    ##
    # Grouped bar chart of the five characteristic scores per scheme
    #
    def plot_characteristic_scores(self, report):
        dataframe = report.get_dataframe()
        df_melt = dataframe.melt(
            id_vars="scheme",
            value_vars=CHARACTERISTICS,
            var_name="characteristic",
            value_name="score",
        )
        df_melt["characteristic"] = df_melt["characteristic"].map(
            lambda c: CHARACTERISTIC_NAMES[c])

        fig = plt.figure(figsize=(10, 5))
        ax = fig.add_subplot(1, 1, 1)
        sns.barplot(
            data=df_melt,
            x="characteristic",
            y="score",
            hue="scheme",
            hue_order=natsorted(dataframe["scheme"].tolist()),
            ax=ax,
        )
        ax.set_ylim([0, 1])
        ax.set_xlabel("")
        ax.set_axisbelow(True)
        ax.set_title(report.get_setting())
        return self._save(fig, "characteristic_scores%s.svg" %
                          self._get_suffix(report.get_setting()))

    ##
    # Schemes ordered by comprehensive score
    #
    def plot_ranking(self, report):
        ranking = report.get_ranking()
        dataframe = pd.DataFrame({
            "scheme": ranking,
            COMPREHENSIVE: [report.get_score(s, COMPREHENSIVE)
                            for s in ranking],
        })

        fig = plt.figure(figsize=(6, 0.5 * len(ranking) + 1.5))
        ax = fig.add_subplot(1, 1, 1)
        sns.barplot(data=dataframe, x=COMPREHENSIVE, y="scheme",
                    order=ranking, color="tab:blue", ax=ax)
        for i, value in enumerate(dataframe[COMPREHENSIVE]):
            ax.text(value, i, " %.3f" % value, va="center")
        ax.set_xlim([0, 1])
        ax.set_xlabel("Comprehensive score")
        ax.set_ylabel("")
        ax.set_title(report.get_setting())
        return self._save(fig, "ranking%s.svg" %
                          self._get_suffix(report.get_setting()))

    ##
    # Robustness and imperceptibility against the watermark complexity w of
    # KGW and BW
    #
    # \return     path to figure or None if no KGW or BW scheme was evaluated
    #
    def plot_complexity_analysis(self, report):
        rows = []
        for scheme in report.get_schemes():
            config = wc.WatermarkConfig.from_label(scheme)
            if config.get_scheme() == "UNIW":
                continue
            for characteristic in ["S_R", "S_I"]:
                rows.append({
                    "family": config.get_scheme(),
                    "w": config.get_window(),
                    "characteristic": CHARACTERISTIC_NAMES[characteristic],
                    "score": report.get_score(scheme, characteristic),
                })
        if len(rows) == 0:
            return None

        dataframe = pd.DataFrame(rows)
        fig = plt.figure(figsize=(6, 4))
        ax = fig.add_subplot(1, 1, 1)
        sns.lineplot(data=dataframe, x="w", y="score", hue="characteristic",
                     style="family", markers=True, ax=ax)
        ax.set_xticks(sorted(dataframe["w"].unique()))
        ax.set_ylim([0, 1])
        ax.set_xlabel("Watermark complexity w")
        ax.set_title(report.get_setting())
        return self._save(fig, "complexity_analysis%s.svg" %
                          self._get_suffix(report.get_setting()))
