"""Write the connected graphs on N vertices (default 9) as canonical graph6,
one per line, by augmenting the internally generated (N-1)-vertex classes.

    python scripts/build_corpus.py --n 9 --out corpora/connected9.g6
"""

import argparse
import logging
import time
from pathlib import Path

from glpt.corpus import GEN_MAX_N, KNOWN_COUNTS, canonical_graph6, extend_connected, generate_connected, ingest


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=9)
    ap.add_argument("--out", type=Path, default=Path("corpora/connected9.g6"))
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s")
    if args.n - 1 > GEN_MAX_N:
        parents = list(ingest(args.out.with_name(f"connected{args.n - 1}.g6")))
    else:
        parents = generate_connected(args.n - 1)
    t0 = time.time()
    graphs = extend_connected(parents)
    logging.info("n=%d: %d classes in %.0f s", args.n, len(graphs), time.time() - t0)
    expected = KNOWN_COUNTS.get(args.n)
    if expected is not None and len(graphs) != expected:
        raise SystemExit(f"count mismatch: got {len(graphs)}, expected {expected}")
    args.out.parent.mkdir(parents=True, exist_ok=True)
    with open(args.out, "w") as fh:
        for g in graphs:
            fh.write(canonical_graph6(g) + "\n")


if __name__ == "__main__":
    main()
