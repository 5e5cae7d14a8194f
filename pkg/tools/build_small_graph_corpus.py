"""Regenerate ``src/limpack/data/graphs_le8.g6`` (every graph on 0..8 vertices).

Takes about a minute; the order-8 layer is built by one-vertex extension
of the order-7 atlas graphs with isomorphism dedupe.
"""

import sys
from pathlib import Path

from limpack.atlas import DATA_FILE, write_small_graphs

if __name__ == "__main__":
    target = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parents[1] / "src" / "limpack" / "data" / DATA_FILE
    count = write_small_graphs(target)
    print(f"wrote {count} graphs to {target}")
