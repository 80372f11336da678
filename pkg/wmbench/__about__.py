__author__ = "WMBench developers"
__email__ = "wmbench@users.noreply.github.com"
__license__ = "BSD-3-Clause"
__version__ = "0.3.0"
__summary__ = "WMBench is a research-focused toolkit to embed, detect, " \
    "attack and comprehensively score decode-time text watermarks of " \
    "language models."
