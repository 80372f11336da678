##
# \file scrubber.py
# \brief      Scrubbing attacks modifying watermarked texts
#
# TokenPerturbationScrubber perturbs every token independently: it is
# replaced by a unigram draw of the model with probability replace_rate,
# deleted with probability delete_rate and followed by an inserted unigram
# draw with probability insert_rate. The checks are done in this order.
# CommandLineParaphraser hands the texts to an external paraphrasing tool.
#

import os
import io
import six
import numpy as np
from abc import ABCMeta, abstractmethod
from scipy.special import softmax

import pysitk.python_helper as ph

import wmbench.base.exceptions as exceptions
import wmbench.base.token_sequence as ts
import wmbench.language_model.sampler as sampler
from wmbench.definitions import CORPUS_ENCODING
from wmbench.definitions import DIR_TMP
from wmbench.definitions import STREAM_SCRUB


class ScrubConfig(object):

    def __init__(self, replace_rate=0., delete_rate=0., insert_rate=0.):
        for name, rate in [("replace_rate", replace_rate),
                           ("delete_rate", delete_rate),
                           ("insert_rate", insert_rate)]:
            if not 0 <= rate <= 1:
                raise exceptions.InvalidParameter(
                    "%s must lie in [0, 1] (got %g)" % (name, rate))
        self._replace_rate = float(replace_rate)
        self._delete_rate = float(delete_rate)
        self._insert_rate = float(insert_rate)

    def get_replace_rate(self):
        return self._replace_rate

    def get_delete_rate(self):
        return self._delete_rate

    def get_insert_rate(self):
        return self._insert_rate

    def is_identity(self):
        return self._replace_rate == 0 and self._delete_rate == 0 and \
            self._insert_rate == 0

    def get_label(self):
        return "r%g_d%g_i%g" % (
            self._replace_rate, self._delete_rate, self._insert_rate)


##
# Abstract scrubbing attack on a corpus of token sequences
#
class Scrubber(six.with_metaclass(ABCMeta, object)):

    def __init__(self, verbose=False):
        self._verbose = verbose
        self._computational_time = ph.get_zero_time()

    def get_computational_time(self):
        return self._computational_time

    ##
    # Scrub every text of a corpus
    #
    # \param      self   The object
    # \param      texts  list of TokenSequence
    # \param      seed   run seed deriving the per-text random streams
    #
    # \return     list of TokenSequence
    #
    def scrub_corpus(self, texts, seed):
        time_start = ph.start_timing()
        scrubbed = self._scrub_corpus(texts, seed)
        self._computational_time = ph.stop_timing(time_start)
        if self._verbose:
            ph.print_info("Scrubbed %d texts (%s)" % (
                len(texts), self._computational_time))
        return scrubbed

    @abstractmethod
    def _scrub_corpus(self, texts, seed):
        pass


class TokenPerturbationScrubber(Scrubber):

    ##
    # \param      self     The object
    # \param      model    LanguageModel providing the unigram distribution
    # \param      config   ScrubConfig
    # \param      verbose  print summary
    #
    def __init__(self, model, config, verbose=False):
        Scrubber.__init__(self, verbose=verbose)
        self._config = config
        self._unigram = softmax(model.logits([]))
        self.reset_statistics()

    def get_config(self):
        return self._config

    def reset_statistics(self):
        self._statistics = {"replaced": 0, "deleted": 0, "inserted": 0}

    def get_statistics(self):
        return dict(self._statistics)

    def scrub(self, text, rng):
        if len(text) < 1:
            raise exceptions.EmptyText()

        scrubbed = []
        for token_id in text.get_ids().tolist():
            u_replace, u_delete, u_insert = rng.random(3)

            if u_replace < self._config.get_replace_rate():
                token_id = sampler.sample(self._unigram, rng)
                self._statistics["replaced"] += 1

            if u_delete < self._config.get_delete_rate():
                self._statistics["deleted"] += 1
            else:
                scrubbed.append(token_id)

            if u_insert < self._config.get_insert_rate():
                scrubbed.append(sampler.sample(self._unigram, rng))
                self._statistics["inserted"] += 1

        return ts.TokenSequence(scrubbed, role=text.get_role())

    def _scrub_corpus(self, texts, seed):
        scrubbed = []
        for i, text in enumerate(texts):
            if len(text) == 0:
                scrubbed.append(text)
                continue
            rng = sampler.create_rng(seed, STREAM_SCRUB, i)
            scrubbed.append(self.scrub(text, rng))
        return scrubbed


##
# Scrub a text by token perturbations
#
# \param      text    TokenSequence, at least one token
# \param      config  ScrubConfig
# \param      model   LanguageModel providing replacement tokens
# \param      rng     numpy Generator
#
# \return     TokenSequence
#
def scrub(text, config, model, rng):
    return TokenPerturbationScrubber(model, config).scrub(text, rng)


##
# Paraphrasing attack by an external tool.
#
# The command template contains the placeholders {input} and {output}. The
# tool reads one text per line from the input file and must write exactly
# one paraphrase per line to the output file, e.g.
# "python paraphrase.py --in {input} --out {output}".
#
class CommandLineParaphraser(Scrubber):

    def __init__(self, vocabulary, command_template,
                 dir_tmp=os.path.join(DIR_TMP, "wmbench_paraphraser"),
                 verbose=False,
                 ):
        Scrubber.__init__(self, verbose=verbose)
        if "{input}" not in command_template or \
                "{output}" not in command_template:
            raise exceptions.InvalidParameter(
                "paraphraser command requires {input} and {output}")
        self._vocabulary = vocabulary
        self._command_template = command_template
        self._dir_tmp = dir_tmp

    def paraphrase(self, texts):
        ph.create_directory(self._dir_tmp)
        path_to_input = os.path.join(self._dir_tmp, "input.txt")
        path_to_output = os.path.join(self._dir_tmp, "output.txt")
        if ph.file_exists(path_to_output):
            os.remove(path_to_output)

        with io.open(path_to_input, "w", encoding=CORPUS_ENCODING) as f:
            f.write(u"".join([u"%s\n" % t for t in texts]))

        cmd = self._command_template.format(
            input=path_to_input, output=path_to_output)
        exit_code = ph.execute_command(cmd, verbose=self._verbose)
        if exit_code != 0:
            raise exceptions.ParaphraserFailed(
                cmd, "exit code %s" % exit_code)
        if not ph.file_exists(path_to_output):
            raise exceptions.ParaphraserFailed(cmd, "no output file written")

        with io.open(path_to_output, "r", encoding=CORPUS_ENCODING) as f:
            paraphrases = f.read().splitlines()
        if len(paraphrases) != len(texts):
            raise exceptions.ParaphraserFailed(
                cmd, "%d texts in, %d paraphrases out" % (
                    len(texts), len(paraphrases)))
        return paraphrases

    def _scrub_corpus(self, texts, seed):
        paraphrases = self.paraphrase(
            [self._vocabulary.decode(t) for t in texts])
        return [self._vocabulary.tokenize(p, vocab_policy="frozen",
                                          role="generated")
                for p in paraphrases]
