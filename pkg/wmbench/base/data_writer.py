##
# \file data_writer.py
# \brief      Writes corpora, models, watermark sidecars, n-gram tables and
#             detection scores to HDD
#
# File formats:
#  - corpus: UTF-8 plain text, one document per line
#  - n-gram model: text dump starting with the lines '#wmbench-ngram-model'
#    and 'version 1', followed by 'order', 'alpha', 'vocabulary <|V|>' and
#    |V| token lines (id order), then per context length L a line
#    'table <L> <number of contexts>' and one line per context
#    '<context ids>\t<id>:<count> <id>:<count> ...' with sorted contexts
#  - n-gram table: '#wmbench-ngram-table', 'version 1', 'n <n>',
#    'contexts <number>' and context lines as for the model
#  - sidecar: JSON, see SidecarWriter
#

import io
import os
import hashlib
import numpy as np
import pandas as pd
from abc import ABCMeta, abstractmethod

import six
import pysitk.python_helper as ph

import wmbench
from wmbench.definitions import CORPUS_ENCODING
from wmbench.definitions import MODEL_FILE_HEADER
from wmbench.definitions import MODEL_FILE_VERSION
from wmbench.definitions import NGRAM_TABLE_FORMAT
from wmbench.definitions import SIDECAR_FORMAT


def _create_parent_directory(path_to_file):
    directory = os.path.dirname(path_to_file)
    if directory != "":
        ph.create_directory(directory)


def _write_lines(lines, path_to_file, verbose):
    _create_parent_directory(path_to_file)
    with io.open(path_to_file, "w", encoding=CORPUS_ENCODING,
                 newline="\n") as f:
        f.write(u"".join([u"%s\n" % line for line in lines]))
    if verbose:
        ph.print_info("File written to '%s'" % path_to_file)


def _format_context_line(context, ids, counts):
    return u"%s\t%s" % (
        " ".join([str(i) for i in context]),
        " ".join(["%d:%d" % (i, c) for i, c in zip(ids, counts)]))


##
# SHA-256 hash of a file's content
#
def get_file_hash(path_to_file):
    sha = hashlib.sha256()
    with open(path_to_file, "rb") as f:
        for block in iter(lambda: f.read(1 << 16), b""):
            sha.update(block)
    return sha.hexdigest()


class DataWriter(six.with_metaclass(ABCMeta, object)):

    def __init__(self, path_to_file, verbose=True):
        self._path_to_file = path_to_file
        self._verbose = verbose

    def get_path_to_file(self):
        return self._path_to_file

    @abstractmethod
    def write_data(self):
        pass


class CorpusWriter(DataWriter):

    ##
    # \param      self          The object
    # \param      texts         list of strings or list of TokenSequence
    # \param      path_to_file  path to output file
    # \param      vocabulary    Vocabulary to decode token sequences
    # \param      verbose       The verbose
    #
    def __init__(self, texts, path_to_file, vocabulary=None, verbose=True):
        DataWriter.__init__(self, path_to_file, verbose=verbose)
        self._texts = texts
        self._vocabulary = vocabulary

    def write_data(self):
        if self._vocabulary is None:
            lines = self._texts
        else:
            lines = [self._vocabulary.decode(t) for t in self._texts]
        _write_lines(lines, self._path_to_file, self._verbose)


class NGramModelWriter(DataWriter):

    def __init__(self, model, path_to_file, verbose=True):
        DataWriter.__init__(self, path_to_file, verbose=verbose)
        self._model = model

    def write_data(self):
        tokens = self._model.get_vocabulary().get_tokens()
        lines = [
            MODEL_FILE_HEADER,
            "version %d" % MODEL_FILE_VERSION,
            "order %d" % self._model.get_order(),
            "alpha %r" % self._model.get_alpha(),
            "vocabulary %d" % len(tokens),
        ]
        lines.extend(tokens)

        for L, table in enumerate(self._model.get_tables()):
            lines.append("table %d %d" % (L, len(table)))
            for context in sorted(table.keys()):
                entry = table[context]
                lines.append(_format_context_line(
                    context, entry.ids, entry.counts))

        _write_lines(lines, self._path_to_file, self._verbose)


class NGramTableWriter(DataWriter):

    def __init__(self, table, path_to_file, verbose=True):
        DataWriter.__init__(self, path_to_file, verbose=verbose)
        self._table = table

    def write_data(self):
        contexts = self._table.get_contexts()
        lines = [
            "#%s" % NGRAM_TABLE_FORMAT,
            "version 1",
            "n %d" % self._table.get_n(),
            "contexts %d" % len(contexts),
        ]
        for context in contexts:
            ids, counts = self._table.get_counts(context)
            lines.append(_format_context_line(context, ids, counts))
        _write_lines(lines, self._path_to_file, self._verbose)


##
# Writes everything a detector needs besides the key-derived partitions:
# scheme label, key, delta, vocabulary size and, for BW, the Select Function
# bit table together with the hash of the frequency snapshot it was built
# from.
#
class SidecarWriter(DataWriter):

    def __init__(self, config, vocabulary_size, path_to_file,
                 select_function=None,
                 verbose=True,
                 ):
        DataWriter.__init__(self, path_to_file, verbose=verbose)
        self._config = config
        self._vocabulary_size = vocabulary_size
        self._select_function = select_function

    def write_data(self):
        dic = {
            "format": SIDECAR_FORMAT,
            "version": wmbench.__version__,
            "label": self._config.get_label(),
            "scheme": self._config.get_scheme(),
            "window": self._config.get_window(),
            "delta": self._config.get_delta(),
            "gamma": self._config.get_gamma(),
            "key": str(self._config.get_key()),
            "vocabulary_size": self._vocabulary_size,
        }
        if self._select_function is not None:
            bits = self._select_function.get_bits()
            dic["frequency_snapshot_sha256"] = \
                self._select_function.get_frequency_snapshot()
            dic["select_bits"] = "".join([str(b) for b in bits.tolist()])

        _create_parent_directory(self._path_to_file)
        ph.write_dictionary_to_json(
            dic, self._path_to_file, verbose=self._verbose)


class ScoreWriter(object):

    ##
    # Per-text detection results as CSV with columns text_id, label, g, T, z
    #
    # \param      results       list of DetectionResult
    # \param      labels        ground-truth label per text (1 watermarked,
    #                           0 not)
    # \param      path_to_file  path to csv file
    #
    @staticmethod
    def write_scores(results, labels, path_to_file, verbose=True):
        dataframe = pd.DataFrame({
            "text_id": np.arange(len(results)),
            "label": np.asarray(labels, dtype=int),
            "g": [r.get_green_count() for r in results],
            "T": [r.get_scored_tokens() for r in results],
            "z": [r.get_z() for r in results],
        })
        _create_parent_directory(path_to_file)
        dataframe.to_csv(path_to_file, index=False, float_format="%.10g")
        if verbose:
            ph.print_info("File written to '%s'" % path_to_file)

    ##
    # ROC curve as CSV of (fpr, tpr, threshold) plus JSON summary
    #
    @staticmethod
    def write_roc(curve, path_to_csv, path_to_json, summary=None,
                  verbose=True):
        dataframe = pd.DataFrame({
            "fpr": curve.get_fpr(),
            "tpr": curve.get_tpr(),
            "threshold": curve.get_thresholds(),
        })
        _create_parent_directory(path_to_csv)
        dataframe.to_csv(path_to_csv, index=False, float_format="%.10g")

        dic = {"auc": curve.get_auc()}
        if summary is not None:
            dic.update(summary)
        ph.write_dictionary_to_json(dic, path_to_json, verbose=verbose)
