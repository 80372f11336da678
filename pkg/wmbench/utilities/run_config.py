##
# \file run_config.py
# \brief      Validated configuration of an experiment run
#
# A RunConfig collects all settings shared by the command line tools. It is
# built from parsed command line arguments; options a tool does not expose
# keep their defaults.
#

import json
import hashlib
import collections

import pysitk.python_helper as ph

import wmbench.base.exceptions as exceptions
import wmbench.attack.scrubber as scr
import wmbench.evaluation.cefw_evaluator as ce
import wmbench.evaluation.characteristic_scores as cs
import wmbench.watermark.watermark_config as wc
import wmbench.definitions as defs

# field name -> default
FIELDS = collections.OrderedDict([
    ("corpus_train", None),
    ("corpus_scoring", None),
    ("corpus_prompts", None),
    ("scoring_split", 5),
    ("order", defs.DEFAULT_ORDER),
    ("alpha", defs.DEFAULT_ALPHA),
    ("temperature", defs.DEFAULT_TEMPERATURE),
    ("schemes", list(defs.SCHEMES)),
    ("delta", defs.DEFAULT_DELTA),
    ("key", defs.DEFAULT_KEY),
    ("n_samples", 200),
    ("n_frequency_texts", 100),
    ("n_robustness", 200),
    ("n_steal_tables", 200),
    ("n_spoof", 100),
    ("max_tokens", defs.MAX_NEW_TOKENS),
    ("prompt_length", defs.PROMPT_LENGTH),
    ("replace_rate", 0.2),
    ("delete_rate", 0.05),
    ("insert_rate", 0.05),
    ("paraphraser_command", None),
    ("intensity", defs.DEFAULT_INTENSITY),
    ("scenario", defs.DEFAULT_SCENARIO),
    ("weights", list(defs.DEFAULT_WEIGHTS)),
    ("bounds_overrides", None),
    ("fpr_cap", defs.FPR_CAP),
    ("z_threshold", defs.Z_THRESHOLD),
    ("seed", None),
    ("dir_output", None),
])

COUNT_FIELDS = [
    "scoring_split",
    "n_samples",
    "n_frequency_texts",
    "n_robustness",
    "n_steal_tables",
    "n_spoof",
    "max_tokens",
    "prompt_length",
]


class RunConfig(object):

    def __init__(self, **kwargs):
        unknown = [k for k in kwargs.keys() if k not in FIELDS]
        if len(unknown) > 0:
            raise exceptions.InvalidParameter(
                "unknown configuration fields %s" % sorted(unknown))

        self._fields = collections.OrderedDict()
        for name, default in FIELDS.items():
            self._fields[name] = kwargs.get(name, default)

        if isinstance(self._fields["bounds_overrides"], str):
            try:
                self._fields["bounds_overrides"] = json.loads(
                    self._fields["bounds_overrides"])
            except ValueError:
                raise exceptions.InvalidParameter(
                    "bounds overrides are not a valid JSON object")

        self._validate()

    ##
    # Build configuration from argparse.Namespace; attributes of other
    # options are ignored
    #
    @classmethod
    def from_args(cls, args):
        dic = vars(args)
        return cls(**{k: v for k, v in dic.items()
                      if k in FIELDS and v is not None})

    def _validate(self):
        if self._fields["seed"] is None:
            raise exceptions.InvalidParameter(
                "a seed is mandatory; runs are never seeded by wall clock")

        for name in COUNT_FIELDS:
            if int(self._fields[name]) < 1:
                raise exceptions.InvalidParameter(
                    "%s must be at least 1" % name)

        if self._fields["order"] < 1:
            raise exceptions.InvalidParameter("order must be at least 1")
        if self._fields["alpha"] <= 0:
            raise exceptions.InvalidParameter("alpha must be positive")
        if self._fields["temperature"] <= 0:
            raise exceptions.InvalidParameter("temperature must be positive")
        if len(self._fields["schemes"]) == 0:
            raise exceptions.InvalidParameter("no watermark scheme given")
        if not 0 < self._fields["fpr_cap"] < 1:
            raise exceptions.InvalidParameter("fpr cap must lie in (0, 1)")
        if self._fields["intensity"] < 0:
            raise exceptions.InvalidParameter("intensity must be nonnegative")

        # raise on invalid labels, rates, weights, scenario and bounds
        self.get_watermark_configs()
        self.get_scrub_config()
        self.get_weight_vector()
        cs.check_scenario(self._fields["scenario"])
        self.get_bounds_overrides()

    def __getattr__(self, name):
        fields = self.__dict__.get("_fields")
        if fields is not None and name in fields:
            return fields[name]
        raise AttributeError(name)

    def get(self, name):
        return self._fields[name]

    ##
    # \return     list of WatermarkConfig in order of the scheme labels
    #
    def get_watermark_configs(self):
        return [wc.WatermarkConfig.from_label(
            label, delta=self._fields["delta"], key=self._fields["key"])
            for label in self._fields["schemes"]]

    def get_scrub_config(self):
        return scr.ScrubConfig(
            replace_rate=self._fields["replace_rate"],
            delete_rate=self._fields["delete_rate"],
            insert_rate=self._fields["insert_rate"],
        )

    def get_weight_vector(self):
        return cs.WeightVector(self._fields["weights"])

    ##
    # \return     dictionary metric -> BoundsSpec, empty if no overrides
    #
    def get_bounds_overrides(self):
        if self._fields["bounds_overrides"] is None:
            return {}
        return ce.parse_bounds_overrides(self._fields["bounds_overrides"])

    def to_dict(self):
        return collections.OrderedDict(self._fields)

    ##
    # SHA-256 over the canonical JSON of all fields except the output
    # directory
    #
    def get_hash(self):
        dic = self.to_dict()
        dic.pop("dir_output")
        dic["key"] = str(dic["key"])
        text = json.dumps(dic, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(text.encode("utf-8")).hexdigest()

    def print_summary(self):
        ph.print_subtitle("Run configuration (hash %s)" % self.get_hash()[:12])
        for name, value in self._fields.items():
            ph.print_info("%s: %s" % (name, value))
