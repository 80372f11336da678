##
# \file exceptions.py
# \brief      User-specific exceptions
#
# Errors are grouped by two marker classes which decide the exit code of the
# command line tools: ConfigurationError (2) and DataError (3).
#


class ConfigurationError(Exception):
    pass


class DataError(Exception):
    pass


##
# Error handling in case a parameter lies outside its admissible range
#
class InvalidParameter(ConfigurationError):

    ##
    # \param      self     The object
    # \param      message  description of violated constraint, string
    #
    def __init__(self, message):
        self.message = message

    def __str__(self):
        return "Invalid parameter: %s" % self.message


class InvalidWatermarkConfig(ConfigurationError):

    def __init__(self, message):
        self.message = message

    def __str__(self):
        return "Invalid watermark configuration: %s" % self.message


##
# Error handling in case characteristic weights do not form a valid weight
# vector
#
class InvalidWeights(ConfigurationError):

    ##
    # \param      self     The object
    # \param      weights  The weights, list of reals
    #
    def __init__(self, weights,
                 reason="weights must be nonnegative and sum to 1"):
        self.weights = weights
        self.reason = reason

    def __str__(self):
        error = "Invalid weights %s: %s." % (
            [float(w) for w in self.weights], self.reason)
        return error


##
# Error handling in case a corpus does not contain any token
#
class EmptyCorpus(DataError):

    ##
    # \param      self    The object
    # \param      source  Description of the corpus, e.g. path to file
    #
    def __init__(self, source="corpus"):
        self.source = source

    def __str__(self):
        error = "Corpus '%s' does not contain any token." % (self.source)
        return error


class EmptyText(DataError):

    def __str__(self):
        return "Text must contain at least one token."


##
# Error handling in case a probability vector is not a valid distribution
#
class InvalidDistribution(DataError):

    def __init__(self, reason):
        self.reason = reason

    def __str__(self):
        return "Invalid probability distribution: %s" % self.reason


##
# Error handling in case a text does not contain any scorable position
#
class TextTooShort(DataError):

    ##
    # \param      self      The object
    # \param      length    Length of text, int
    # \param      required  Minimum length required, int
    #
    def __init__(self, length, required):
        self.length = length
        self.required = required

    def __str__(self):
        error = "Text of length %d too short: at least %d tokens required." % (
            self.length, self.required)
        return error


class EmptyScoreSet(DataError):

    def __init__(self, name="score set"):
        self.name = name

    def __str__(self):
        return "The %s is empty." % self.name


##
# Error handling in case normalization bounds coincide or are not ordered as
# required by the normalization principle
#
class DegenerateBounds(DataError):

    def __init__(self, upper, lower):
        self.upper = upper
        self.lower = lower

    def __str__(self):
        error = "Degenerate normalization bounds: upper=%g, lower=%g." % (
            self.upper, self.lower)
        return error


class NonpositiveBaseline(DataError):

    def __init__(self, value):
        self.value = value

    def __str__(self):
        return "Baseline metric value must be positive (got %g)." % self.value


##
# Error handling in case metric inputs required by a characteristic are
# missing
#
class MissingMetric(DataError):

    ##
    # \param      self             The object
    # \param      scheme           Label of evaluated scheme, string
    # \param      characteristics  Characteristics lacking inputs mapped to
    #                              the missing metric names, dictionary
    #
    def __init__(self, scheme, characteristics):
        self.scheme = scheme
        self.characteristics = characteristics

    def __str__(self):
        missing = "; ".join([
            "%s (%s)" % (c, ", ".join(m))
            for c, m in sorted(self.characteristics.items())])
        error = "Scheme '%s' lacks metric inputs for: %s" % (
            self.scheme, missing)
        return error


class MissingSidecar(DataError):

    def __init__(self, path_to_file):
        self.path_to_file = path_to_file

    def __str__(self):
        error = "Watermark sidecar '%s' does not exist. " \
            "Run wmbench_generate first." % (self.path_to_file)
        return error


##
# Error handling in case of an attempted object access which is not being
# created yet
#
class ObjectNotCreated(DataError):

    ##
    # Store name of function which shall be executed to create desired object.
    #
    # \param      self           The object
    # \param      function_call  function call missing to create the object
    #
    def __init__(self, function_call):
        self.function_call = function_call

    def __str__(self):
        error = "Object has not been created yet. Run '%s' first." % (
            self.function_call)
        return error


##
# Error handling in case specified file does not exist
#
class FileNotExistent(DataError):

    def __init__(self, missing_file):
        self.missing_file = missing_file

    def __str__(self):
        error = "File '%s' does not exist" % (self.missing_file)
        return error


class DirectoryNotExistent(DataError):

    def __init__(self, missing_directory):
        self.missing_directory = missing_directory

    def __str__(self):
        error = "Directory '%s' does not exist" % (self.missing_directory)
        return error


##
# Error handling in case a file was written by another tool or with an
# unsupported format version
#
class UnsupportedFileFormat(DataError):

    def __init__(self, path_to_file, reason):
        self.path_to_file = path_to_file
        self.reason = reason

    def __str__(self):
        return "File '%s' cannot be read: %s" % (
            self.path_to_file, self.reason)


##
# Error handling in case an external paraphrasing tool fails or returns a
# different number of texts
#
class ParaphraserFailed(DataError):

    def __init__(self, command, reason):
        self.command = command
        self.reason = reason

    def __str__(self):
        return "Paraphrasing command '%s' failed: %s" % (
            self.command, self.reason)
