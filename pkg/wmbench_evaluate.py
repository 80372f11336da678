# -*- coding: utf-8 -*-
import sys

from wmbench.application.evaluate_watermarks import main

if __name__ == "__main__":
    sys.exit(main())
