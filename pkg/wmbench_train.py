# -*- coding: utf-8 -*-
import sys

from wmbench.application.train_model import main

if __name__ == "__main__":
    sys.exit(main())
