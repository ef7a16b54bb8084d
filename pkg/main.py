"""Command-line driver for the clique-graph toolkit."""
from __future__ import annotations

from cliquegraph.cli import main

if __name__ == "__main__":
    raise SystemExit(main())
