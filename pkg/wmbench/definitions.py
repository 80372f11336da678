import os

from pysitk.definitions import DIR_TMP

DIR_ROOT = os.path.realpath(
    os.path.join(os.path.dirname(os.path.abspath(__file__)), ".."))
DIR_TEST = os.path.join(DIR_ROOT, "data", "tests")
DIR_FIXTURES = os.path.join(DIR_ROOT, "data", "fixtures")

CORPUS_ENCODING = "utf-8"

# Vocabulary
SENTINEL_TOKEN = "<pad>"
SENTINEL_ID = 0

# Toy language model
DEFAULT_ORDER = 3
DEFAULT_ALPHA = 0.1
DEFAULT_TEMPERATURE = 1.
MAX_NEW_TOKENS = 200
PROMPT_LENGTH = 30
MODEL_FILE_HEADER = "#wmbench-ngram-model"
MODEL_FILE_VERSION = 1

# Watermarks
SCHEME_KINDS = ["UNIW", "KGW", "BW"]
SCHEMES = ["UNIW",
           "KGW1", "KGW2", "KGW3", "KGW4",
           "BW1", "BW2", "BW3", "BW4"]
ORIGINAL = "Original"
GAMMA = 0.5
DEFAULT_DELTA = 2.
DEFAULT_KEY = 15485863
Z_THRESHOLD = 4.
SIDECAR_FORMAT = "wmbench-sidecar"
# KGW green lists kept per processor, least recently used evicted first
PARTITION_CACHE_SIZE = 2048

# Attacks
STEAL_NS = [1, 2, 3, 4]
DEFAULT_INTENSITY = 4.
NGRAM_TABLE_FORMAT = "wmbench-ngram-table"

# Evaluation
CHARACTERISTICS = ["S_D", "S_T", "S_U", "S_R", "S_I"]
CHARACTERISTIC_NAMES = {
    "S_D": "Detectability",
    "S_T": "Text Quality",
    "S_U": "Usability",
    "S_R": "Robustness",
    "S_I": "Imperceptibility",
}
DEFAULT_WEIGHTS = [1. / 6, 1. / 6, 1. / 6, 1. / 4, 1. / 4]
SCENARIOS = ["A", "NA"]
DEFAULT_SCENARIO = "A"
REFERENCE_TOLERANCE = 0.002
FPR_CAP = 0.01

# Fixture tables (appendix layout), one csv file per characteristic
FIXTURE_FILES = {
    "detectability": "detectability.csv",
    "text_quality": "text_quality.csv",
    "usability": "usability.csv",
    "robustness": "robustness.csv",
    "imperceptibility": "imperceptibility.csv",
}
FIXTURE_REFERENCE = "comprehensive.csv"
FIXTURE_BATCH_SIZE = 5000

# Independent random streams, combined with the run seed and text index
STREAM_FREQUENCIES = 1
STREAM_CLEAN = 2
STREAM_WATERMARK = 3
STREAM_SCRUB = 4
STREAM_STEAL = 5

# Memory cost is reported in MiB
BYTES_PER_MEGABYTE = 1024. ** 2
