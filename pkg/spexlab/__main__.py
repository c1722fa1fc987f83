#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Built-in modules
import sys

# The main object of our package
from spexlab.cli import main


# Execute when run, not when imported
if __name__ == "__main__":
    sys.exit(main())
