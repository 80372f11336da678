##
# \file input_arparser.py
# \brief      Class holding a collection of possible arguments to parse for
#             the command line tools
#

import os
import re
import six
import sys
import json
import argparse
import platform
import datetime

import pysitk.python_helper as ph

import wmbench
import wmbench.definitions as defs

SCHEME_TYPES = "(%s)" % ", ".join(defs.SCHEMES)


##
# Class holding a collection of possible arguments to parse for the command
# line tools
#
class InputArgparser(object):

    def __init__(self,
                 description=None,
                 prog=None,
                 epilog="WMBench version: %s, Author: %s" % (
                     wmbench.__version__,
                     wmbench.__author__,
                 ),
                 config_arg="--config"
                 ):

        config_helper = "Args that start with '--' (eg. --dir-output) " \
            "can also be set in a config file (specified via %s). " \
            "If an arg is specified in more than one place, then " \
            "commandline values override config file values which " \
            "override defaults." % (config_arg)

        kwargs = {}
        if description is not None:
            kwargs['description'] = "%s %s" % (description, config_helper)
        if prog is not None:
            kwargs['prog'] = prog
        if epilog is not None:
            kwargs['epilog'] = epilog

        self._parser = argparse.ArgumentParser(**kwargs)
        self._parser.add_argument(
            config_arg,
            help="Configuration file in JSON format.")
        self._parser.add_argument(
            "--version",
            action="version",
            help="Show WMBench's version number and exit",
            version="%s" % wmbench.__version__,
        )
        self._config_arg = config_arg
        self._args = None

    def get_parser(self):
        return self._parser

    ##
    # Parse arguments; entries of a config file given via --config are
    # inserted ahead of the command line arguments.
    #
    # \param      self  The object
    # \param      argv  list of argument strings; sys.argv[1:] if None
    #
    # \return     argparse.Namespace
    #
    def parse_args(self, argv=None):
        if argv is None:
            argv = sys.argv[1:]
        argv = list(argv)

        if self._config_arg in argv:
            argv = self._parse_config_file(argv)

        self._args = self._parser.parse_args(argv)
        return self._args

    def print_arguments(self, args, title="Configuration:"):
        ph.print_title(title)
        for arg in sorted(vars(args)):
            ph.print_info("%s: " % (arg), newline=False)
            vals = getattr(args, arg)

            if type(vals) is list:
                print("")
                for val in vals:
                    print("\t%s" % val)
            else:
                print(vals)
        print("\nWMBench version: %s" % wmbench.__version__)
        ph.print_line_separator(add_newline=False)
        print("")

    ##
    # Writes the configuration of a performed script execution.
    #
    # \param      self    The object
    # \param      file    path to executed file obtained, e.g. via
    #                     os.path.abspath(__file__)
    # \param      prefix  filename prefix
    #
    # \return     path to written config file
    #
    def log_config(self,
                   file,
                   prefix="config"):

        # parser returns options with underscores, e.g. 'dir_output'
        dic_with_underscores = dict(vars(self._args))
        dir_output = dic_with_underscores["dir_output"]

        name = os.path.basename(file).split(".")[0]
        now = datetime.datetime.now()
        time_stamp = now.strftime("%Y%m%d-%H%M%S")
        path_to_config_file = os.path.join(
            dir_output,
            "%s_%s_%s.json" % (prefix, name, time_stamp))

        # exclude config file (as setting in parameters reflected anyway)
        dic_with_underscores.pop(re.sub("--", "", self._config_arg))

        # dashes for correct commandline parsing, e.g. "dir-output"
        dic = {
            re.sub("_", "-", k): v
            for k, v in six.iteritems(dic_with_underscores)}

        try:
            login = os.getlogin()
        except OSError:
            login = "unknown_login"
        info_args = [
            "Python %s" % platform.python_version(),
            platform.system(),
            platform.release(),
            platform.machine(),
        ]
        dic["user"] = "%s @ %s (%s)" % (
            login, platform.node(), ", ".join(info_args))
        dic["date"] = now.strftime("%Y-%m-%d %H:%M:%S")
        dic["version"] = wmbench.__version__

        ph.create_directory(dir_output)
        ph.write_dictionary_to_json(dic, path_to_config_file, verbose=True)
        return path_to_config_file

    # ------------------------------- Corpora -------------------------------

    def add_corpus_train(
        self,
        option_string="--corpus-train",
        type=str,
        help="Path to training corpus (UTF-8, one document per line).",
        default=None,
        required=True,
    ):
        self._add_argument(dict(locals()))

    def add_corpus_scoring(
        self,
        option_string="--corpus-scoring",
        type=str,
        help="Path to corpus of the scoring model used for perplexity. "
        "If not given, every k-th line of the training corpus is held out "
        "for the scoring model (see --scoring-split).",
        default=None,
        required=False,
    ):
        self._add_argument(dict(locals()))

    def add_corpus_prompts(
        self,
        option_string="--corpus-prompts",
        type=str,
        help="Path to prompt corpus; the first tokens of every line are used "
        "as prompt.",
        default=None,
        required=True,
    ):
        self._add_argument(dict(locals()))

    def add_scoring_split(
        self,
        option_string="--scoring-split",
        type=int,
        help="Every k-th line of the training corpus is held out for the "
        "scoring model if no scoring corpus is given.",
        default=5,
    ):
        self._add_argument(dict(locals()))

    # --------------------------- Language model ----------------------------

    def add_order(
        self,
        option_string="--order",
        type=int,
        help="Order k of the n-gram language model.",
        default=defs.DEFAULT_ORDER,
    ):
        self._add_argument(dict(locals()))

    def add_alpha(
        self,
        option_string="--alpha",
        type=float,
        help="Laplace smoothing constant of the language model.",
        default=defs.DEFAULT_ALPHA,
    ):
        self._add_argument(dict(locals()))

    def add_temperature(
        self,
        option_string="--temperature",
        type=float,
        help="Sampling temperature.",
        default=defs.DEFAULT_TEMPERATURE,
    ):
        self._add_argument(dict(locals()))

    def add_max_tokens(
        self,
        option_string="--max-tokens",
        type=int,
        help="Maximum number of generated tokens per text.",
        default=defs.MAX_NEW_TOKENS,
    ):
        self._add_argument(dict(locals()))

    def add_prompt_length(
        self,
        option_string="--prompt-length",
        type=int,
        help="Number of leading tokens of a prompt corpus line used as "
        "prompt.",
        default=defs.PROMPT_LENGTH,
    ):
        self._add_argument(dict(locals()))

    # ------------------------------ Watermarks -----------------------------

    def add_schemes(
        self,
        option_string="--schemes",
        nargs="+",
        type=str,
        help="Watermark labels %s." % SCHEME_TYPES,
        default=defs.SCHEMES,
    ):
        self._add_argument(dict(locals()))

    def add_delta(
        self,
        option_string="--delta",
        type=float,
        help="Watermark strength added to green logits.",
        default=defs.DEFAULT_DELTA,
    ):
        self._add_argument(dict(locals()))

    def add_key(
        self,
        option_string="--key",
        type=int,
        help="Secret watermark key (64-bit unsigned integer).",
        default=defs.DEFAULT_KEY,
    ):
        self._add_argument(dict(locals()))

    def add_n_samples(
        self,
        option_string="--n-samples",
        type=int,
        help="Number of generated texts per population.",
        default=200,
    ):
        self._add_argument(dict(locals()))

    def add_n_frequency_texts(
        self,
        option_string="--n-frequency-texts",
        type=int,
        help="Number of unwatermarked texts sampled to estimate token "
        "frequencies for the Select Function of BW.",
        default=100,
    ):
        self._add_argument(dict(locals()))

    def add_z_threshold(
        self,
        option_string="--z-threshold",
        type=float,
        help="z-score threshold of the hard detection decision.",
        default=defs.Z_THRESHOLD,
    ):
        self._add_argument(dict(locals()))

    def add_fpr_cap(
        self,
        option_string="--fpr-cap",
        type=float,
        help="False positive rate at which the true positive rate is "
        "reported.",
        default=defs.FPR_CAP,
    ):
        self._add_argument(dict(locals()))

    # ------------------------------- Attacks -------------------------------

    def add_kind(
        self,
        option_string="--kind",
        nargs="+",
        type=str,
        help="Attacks to run (scrub, steal).",
        default=["scrub", "steal"],
    ):
        self._add_argument(dict(locals()))

    def add_n_robustness(
        self,
        option_string="--n-robustness",
        type=int,
        help="Number of watermarked texts attacked by scrubbing.",
        default=200,
    ):
        self._add_argument(dict(locals()))

    def add_n_steal_tables(
        self,
        option_string="--n-steal-tables",
        type=int,
        help="Number of watermarked and clean texts the STEAL attacker "
        "counts n-grams on.",
        default=200,
    ):
        self._add_argument(dict(locals()))

    def add_n_spoof(
        self,
        option_string="--n-spoof",
        type=int,
        help="Number of spoofed texts per STEAL attack.",
        default=100,
    ):
        self._add_argument(dict(locals()))

    def add_replace_rate(
        self,
        option_string="--replace-rate",
        type=float,
        help="Per-token probability of replacing a token when scrubbing.",
        default=0.2,
    ):
        self._add_argument(dict(locals()))

    def add_delete_rate(
        self,
        option_string="--delete-rate",
        type=float,
        help="Per-token probability of deleting a token when scrubbing.",
        default=0.05,
    ):
        self._add_argument(dict(locals()))

    def add_insert_rate(
        self,
        option_string="--insert-rate",
        type=float,
        help="Per-token probability of inserting a token when scrubbing.",
        default=0.05,
    ):
        self._add_argument(dict(locals()))

    def add_paraphraser_command(
        self,
        option_string="--paraphraser-command",
        type=str,
        help="External paraphrasing command used instead of token "
        "perturbation, with placeholders {input} and {output} for "
        "one-document-per-line files.",
        default=None,
        required=False,
    ):
        self._add_argument(dict(locals()))

    def add_intensity(
        self,
        option_string="--intensity",
        type=float,
        help="Logit bias scale of the STEAL spoofing generator.",
        default=defs.DEFAULT_INTENSITY,
    ):
        self._add_argument(dict(locals()))

    # ------------------------------ Evaluation -----------------------------

    def add_scenario(
        self,
        option_string="--scenario",
        type=str,
        help="Imperceptibility scenario: A (attacker takes the strongest "
        "attack) or NA (average over attacks).",
        default=defs.DEFAULT_SCENARIO,
    ):
        self._add_argument(dict(locals()))

    def add_weights(
        self,
        option_string="--weights",
        nargs=len(defs.CHARACTERISTICS),
        type=float,
        help="Demand weights of %s, summing to 1." % (
            ", ".join(defs.CHARACTERISTICS)),
        default=defs.DEFAULT_WEIGHTS,
    ):
        self._add_argument(dict(locals()))

    def add_bounds_overrides(
        self,
        option_string="--bounds-overrides",
        type=str,
        help="JSON object mapping metric names to preset bounds "
        "[upper, lower], e.g. '{\"ppl\": [1.0, 10.0]}'.",
        default=None,
        required=False,
    ):
        self._add_argument(dict(locals()))

    def add_metric_source(
        self,
        option_string="--metric-source",
        type=str,
        help="Metric source of the evaluation (live, fixture).",
        default="live",
    ):
        self._add_argument(dict(locals()))

    def add_dir_fixtures(
        self,
        option_string="--dir-fixtures",
        type=str,
        help="Directory with the metric fixture tables.",
        default=defs.DIR_FIXTURES,
    ):
        self._add_argument(dict(locals()))

    def add_plots(
        self,
        option_string="--plots",
        type=int,
        help="Turn on/off writing of SVG plots.",
        default=1,
    ):
        self._add_argument(dict(locals()))

    # -------------------------------- Other --------------------------------

    def add_seed(
        self,
        option_string="--seed",
        type=int,
        help="Seed of all random streams.",
        default=None,
        required=True,
    ):
        self._add_argument(dict(locals()))

    def add_dir_output(
        self,
        option_string="--dir-output",
        type=str,
        help="Output directory of the run.",
        default=None,
        required=True,
    ):
        self._add_argument(dict(locals()))

    def add_log_config(
        self,
        option_string="--log-config",
        type=int,
        help="Turn on/off configuration log of executed script.",
        default=0,
    ):
        self._add_argument(dict(locals()))

    def add_verbose(
        self,
        option_string="--verbose",
        type=int,
        help="Turn on/off verbose output.",
        default=1,
    ):
        self._add_argument(dict(locals()))

    ##
    # Insert config file entries ahead of the given arguments.
    #
    # Entries for options the parser does not know are skipped so that one
    # config file can serve all command line tools.
    #
    def _parse_config_file(self, argv):
        path_to_config_file = argv[argv.index(self._config_arg) + 1]
        dic = ph.read_dictionary_from_json(path_to_config_file)

        known_options = self._parser._option_string_actions
        inserted = []
        for k, v in six.iteritems(dic):

            # ignore log info in config files
            if k in ["version", "user", "date"]:
                continue

            option_string = "--%s" % re.sub("_", "-", k)
            if option_string not in known_options:
                continue

            if v is None:
                continue

            if type(v) is list:
                inserted.append(option_string)
                inserted.extend([str(vi) for vi in v])
            elif type(v) is bool:
                inserted.extend([option_string, str(int(v))])
            elif type(v) is dict:
                inserted.extend([option_string, json.dumps(v)])
            else:
                inserted.extend([option_string, str(v)])

        # Later options, outside of the config file, overwrite config values
        return inserted + argv

    ##
    # Adds an argument to argument parser.
    #
    # \param      self     The object
    # \param      allvars  all variables set in the respective add_* function
    #
    def _add_argument(self, allvars):

        allvars.pop('self')
        option_string = allvars.pop('option_string')

        kwargs = {}
        for key, value in six.iteritems(allvars):
            kwargs[key] = value

        # Add information on default value in case provided
        if 'default' in kwargs.keys():

            if type(kwargs['default']) == list:
                txt = " ".join([str(i) for i in kwargs['default']])
            else:
                txt = str(kwargs['default'])
            txt_default = " [default: %s]" % txt

            if 'required' in kwargs.keys():
                if kwargs['default'] is not None and not kwargs['required']:
                    kwargs['help'] += txt_default
            else:
                if kwargs['default'] is not None:
                    kwargs['help'] += txt_default

        self._parser.add_argument(option_string, **kwargs)
