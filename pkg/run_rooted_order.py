#!/usr/bin/env python3
"""
Quick script to run the rooted-order toolkit from a source checkout.

    python run_rooted_order.py rooted-list --path 5
    python run_rooted_order.py explore --graph tests/fixtures/graphs/diamond.json --max-power 3
"""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from src.cli import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
