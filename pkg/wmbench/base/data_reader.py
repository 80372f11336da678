##
# \file data_reader.py
# \brief      Reads corpora, models, watermark sidecars, n-gram tables and
#             metric fixture tables
#
# See data_writer.py for the file formats.
#

import io
import os
import collections
import numpy as np
import pandas as pd
from abc import ABCMeta, abstractmethod

import six
import pysitk.python_helper as ph

import wmbench.base.exceptions as exceptions
import wmbench.base.vocabulary as voc
import wmbench.language_model.ngram_model as ngm
import wmbench.attack.ngram_table as nt
import wmbench.evaluation.metric_store as ms
import wmbench.watermark.select_function as sf
import wmbench.watermark.watermark_config as wc
from wmbench.definitions import CORPUS_ENCODING
from wmbench.definitions import FIXTURE_BATCH_SIZE
from wmbench.definitions import FIXTURE_FILES
from wmbench.definitions import FIXTURE_REFERENCE
from wmbench.definitions import MODEL_FILE_HEADER
from wmbench.definitions import MODEL_FILE_VERSION
from wmbench.definitions import NGRAM_TABLE_FORMAT
from wmbench.definitions import ORIGINAL
from wmbench.definitions import SIDECAR_FORMAT

# Identifying columns of fixture tables
FIXTURE_ID_COLUMNS = ["model", "dataset", "metric"]


def _read_lines(path_to_file):
    if not ph.file_exists(path_to_file):
        raise exceptions.FileNotExistent(path_to_file)
    with io.open(path_to_file, "r", encoding=CORPUS_ENCODING) as f:
        return f.read().splitlines()


def _parse_context_line(path_to_file, line):
    try:
        context, successors = line.split("\t")
        context = tuple(int(i) for i in context.split())
        pairs = [s.split(":") for s in successors.split()]
        return context, {int(i): int(c) for i, c in pairs}
    except ValueError:
        raise exceptions.UnsupportedFileFormat(
            path_to_file, "malformed context line '%s'" % line)


def _parse_key_value(path_to_file, line, key, dtype):
    entries = line.split(" ")
    if len(entries) < 2 or entries[0] != key:
        raise exceptions.UnsupportedFileFormat(
            path_to_file, "expected '%s <value>', got '%s'" % (key, line))
    try:
        return [dtype(e) for e in entries[1:]]
    except ValueError:
        raise exceptions.UnsupportedFileFormat(
            path_to_file, "invalid value in '%s'" % line)


##
# DataReader is an abstract class to read data.
#
class DataReader(six.with_metaclass(ABCMeta, object)):

    def __init__(self, path_to_file):
        self._path_to_file = path_to_file
        self._data = None

    @abstractmethod
    def read_data(self):
        pass

    def get_data(self):
        if self._data is None:
            raise exceptions.ObjectNotCreated("read_data")
        return self._data


class CorpusReader(DataReader):

    ##
    # Read documents, one per line; empty lines are kept so that line
    # numbers stay aligned with text ids
    #
    def read_data(self):
        self._data = _read_lines(self._path_to_file)

    ##
    # Tokenize the documents with a frozen vocabulary
    #
    # \return     list of TokenSequence
    #
    def get_sequences(self, vocabulary, role="generated"):
        return [vocabulary.tokenize(t, vocab_policy="frozen", role=role)
                for t in self.get_data()]


class NGramModelReader(DataReader):

    def read_data(self):
        path = self._path_to_file
        lines = _read_lines(path)
        if len(lines) < 5 or lines[0] != MODEL_FILE_HEADER:
            raise exceptions.UnsupportedFileFormat(
                path, "missing header '%s'" % MODEL_FILE_HEADER)

        version = _parse_key_value(path, lines[1], "version", int)[0]
        if version != MODEL_FILE_VERSION:
            raise exceptions.UnsupportedFileFormat(
                path, "unsupported version %d" % version)
        order = _parse_key_value(path, lines[2], "order", int)[0]
        alpha = _parse_key_value(path, lines[3], "alpha", float)[0]
        size = _parse_key_value(path, lines[4], "vocabulary", int)[0]

        tokens = lines[5:5 + size]
        vocabulary = voc.Vocabulary(tokens[1:])
        if vocabulary.get_tokens() != tokens:
            raise exceptions.UnsupportedFileFormat(
                path, "vocabulary does not start with the sentinel token "
                "or contains duplicates")

        tables = []
        i = 5 + size
        for L in range(order):
            level, n_contexts = _parse_key_value(path, lines[i], "table", int)
            if level != L:
                raise exceptions.UnsupportedFileFormat(
                    path, "expected table %d, got table %d" % (L, level))
            counts = {}
            for line in lines[i + 1:i + 1 + n_contexts]:
                context, successors = _parse_context_line(path, line)
                counts[context] = successors
            tables.append(ngm.NGramModel.convert_counts(counts))
            i += 1 + n_contexts

        self._data = ngm.NGramModel(vocabulary, order, alpha, tables)


class NGramTableReader(DataReader):

    def read_data(self):
        path = self._path_to_file
        lines = _read_lines(path)
        if len(lines) < 4 or lines[0] != "#%s" % NGRAM_TABLE_FORMAT:
            raise exceptions.UnsupportedFileFormat(
                path, "missing header '#%s'" % NGRAM_TABLE_FORMAT)
        n = _parse_key_value(path, lines[2], "n", int)[0]
        n_contexts = _parse_key_value(path, lines[3], "contexts", int)[0]

        counts = {}
        for line in lines[4:4 + n_contexts]:
            context, successors = _parse_context_line(path, line)
            counts[context] = successors
        self._data = nt.NGramTable(n, counts)


class SidecarReader(DataReader):

    def read_data(self):
        if not ph.file_exists(self._path_to_file):
            raise exceptions.MissingSidecar(self._path_to_file)
        dic = ph.read_dictionary_from_json(self._path_to_file)
        if dic.get("format") != SIDECAR_FORMAT:
            raise exceptions.UnsupportedFileFormat(
                self._path_to_file, "not a watermark sidecar")

        config = wc.WatermarkConfig(
            dic["scheme"],
            delta=dic["delta"],
            window=dic["window"],
            key=int(dic["key"]),
            gamma=dic["gamma"],
        )
        vocabulary_size = int(dic["vocabulary_size"])

        select_function = None
        if "select_bits" in dic:
            bits = np.array([int(b) for b in dic["select_bits"]],
                            dtype=np.uint8)
            if bits.size != vocabulary_size:
                raise exceptions.UnsupportedFileFormat(
                    self._path_to_file, "bit table does not cover vocabulary")
            select_function = sf.SelectFunction(
                bits, dic.get("frequency_snapshot_sha256"))

        self._data = (config, vocabulary_size, select_function)


class ScoreReader(DataReader):

    def read_data(self):
        if not ph.file_exists(self._path_to_file):
            raise exceptions.FileNotExistent(self._path_to_file)
        self._data = pd.read_csv(self._path_to_file)


##
# Reads appendix-layout metric tables.
#
# Every csv file has the header 'model,dataset,metric,Original,<schemes>'
# and one row per (model, dataset, metric). Detection times in the tables
# are totals over a batch of FIXTURE_BATCH_SIZE texts and are converted to
# seconds per text.
#
class MetricFixtureReader(object):

    def __init__(self, dir_fixtures):
        self._dir_fixtures = dir_fixtures
        self._metric_stores = None
        self._reference = None

    def read_data(self):
        if not ph.directory_exists(self._dir_fixtures):
            raise exceptions.DirectoryNotExistent(self._dir_fixtures)

        stores = collections.OrderedDict()
        for name in sorted(FIXTURE_FILES.keys()):
            dataframe = self._read_table(FIXTURE_FILES[name])
            for _, row in dataframe.iterrows():
                setting = self._get_setting(row)
                store = stores.setdefault(setting, ms.MetricStore())
                for population in self._get_populations(dataframe):
                    value = row[population]
                    if pd.isnull(value):
                        continue
                    if row["metric"] == ms.METRIC_DETECT_TIME:
                        value = value / float(FIXTURE_BATCH_SIZE)
                    store.set_metric(population, row["metric"], value,
                                     provenance=ms.PROVENANCE_FIXTURE)
        self._metric_stores = stores

        reference = collections.OrderedDict()
        path_to_reference = os.path.join(
            self._dir_fixtures, FIXTURE_REFERENCE)
        if ph.file_exists(path_to_reference):
            dataframe = self._read_table(FIXTURE_REFERENCE)
            for _, row in dataframe.iterrows():
                setting_reference = reference.setdefault(
                    self._get_setting(row), {})
                for scheme in self._get_populations(dataframe):
                    if pd.isnull(row[scheme]):
                        continue
                    setting_reference.setdefault(scheme, {})[
                        row["metric"]] = float(row[scheme])
        self._reference = reference

    def _read_table(self, filename):
        path_to_file = os.path.join(self._dir_fixtures, filename)
        if not ph.file_exists(path_to_file):
            raise exceptions.FileNotExistent(path_to_file)
        dataframe = pd.read_csv(path_to_file)
        missing = [c for c in FIXTURE_ID_COLUMNS + [ORIGINAL]
                   if c not in dataframe.columns]
        if len(missing) > 0:
            raise exceptions.UnsupportedFileFormat(
                path_to_file, "missing columns %s" % missing)
        return dataframe

    @staticmethod
    def _get_setting(row):
        return "%s/%s" % (row["model"], row["dataset"])

    @staticmethod
    def _get_populations(dataframe):
        return [c for c in dataframe.columns if c not in FIXTURE_ID_COLUMNS]

    ##
    # \return     dictionary setting -> MetricStore
    #
    def get_metric_stores(self):
        if self._metric_stores is None:
            raise exceptions.ObjectNotCreated("read_data")
        return self._metric_stores

    ##
    # \return     dictionary setting -> {scheme: {cell: value}}
    #
    def get_reference(self):
        if self._reference is None:
            raise exceptions.ObjectNotCreated("read_data")
        return self._reference
