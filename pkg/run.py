#!/usr/bin/env python3
"""
relqi command line runner

Usage:
    python run.py wigner --boost 0,0,0.5 --momentum 1,0,0
    python run.py channel boost-exact --v 0.5 --delta 0.05
    python run.py multiplicity --n-max 8
    python run.py sweep velocity --v 0.1:0.9:9 --delta 0.01 --deterministic
    python run.py selftest

See ``python run.py --help`` for the full command list.
"""

import sys

from cli.main import main

if __name__ == "__main__":
    sys.exit(main())
