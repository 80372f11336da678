# -*- coding: utf-8 -*-
import sys

from wmbench.application.generate_texts import main

if __name__ == "__main__":
    sys.exit(main())
