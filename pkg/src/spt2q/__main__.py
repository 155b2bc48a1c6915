"""Allow `python -m spt2q` as an alias for the spt2q console script."""

from __future__ import annotations

import sys

from spt2q.cli import main

if __name__ == "__main__":
    sys.exit(main())
