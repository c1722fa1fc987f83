#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Special variables
__version__ = "1.0.0"

# Constants
project_url = "https://github.com/spexlab/spexlab"
schema_version = "v1"
