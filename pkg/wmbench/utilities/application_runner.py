##
# \file application_runner.py
# \brief      Maps errors of the command line tools to exit codes
#

import pysitk.python_helper as ph

import wmbench.base.exceptions as exceptions

EXIT_SUCCESS = 0
EXIT_CONFIGURATION_ERROR = 2
EXIT_DATA_ERROR = 3


##
# Run the main function of a command line tool.
#
# \param      function  callable without arguments
#
# \return     exit code: 0 success, 2 configuration error, 3 data error
#
def run_application(function):
    try:
        function()
    except exceptions.ConfigurationError as e:
        ph.print_warning("Configuration error: %s" % e)
        return EXIT_CONFIGURATION_ERROR
    except exceptions.DataError as e:
        ph.print_warning("Data error: %s" % e)
        return EXIT_DATA_ERROR
    return EXIT_SUCCESS
