# -*- coding: utf-8 -*-
import sys

from wmbench.application.detect_watermark import main

if __name__ == "__main__":
    sys.exit(main())
