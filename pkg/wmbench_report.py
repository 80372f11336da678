# -*- coding: utf-8 -*-
import sys

from wmbench.application.show_report import main

if __name__ == "__main__":
    sys.exit(main())
