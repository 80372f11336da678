# -*- coding: utf-8 -*-
import sys

from wmbench.application.run_attack import main

if __name__ == "__main__":
    sys.exit(main())
