#!/usr/bin/python

##
# \file run_tests.py
# \brief      main-file to run specified unit tests
#
# \date       October 2026
#


import unittest

from case_study_desk_scale_properties_test import *
from case_study_desk_scale_test import *
from cefw_evaluator_test import *
from characteristic_scores_test import *
from data_io_test import *
from green_token_detector_test import *
from ngram_model_test import *
from ngram_table_test import *
from normalization_test import *
from partition_test import *
from roc_analysis_test import *
from run_config_test import *
from sampler_test import *
from scrubber_test import *
from select_function_test import *
from steal_test import *
from vocabulary_test import *
from watermark_config_test import *
from watermark_processor_test import *

if __name__ == '__main__':
    print("\nUnit tests:\n--------------")
    unittest.main()
