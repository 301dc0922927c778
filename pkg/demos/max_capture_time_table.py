"""Largest capture time on n vertices and the rank vectors of the graphs
that attain it."""

import sys
from collections import Counter

from copwin import corner_rank, enumerate_with_forms, max_capture_time, rank_cardinality_vector, top_heaviness


def main(max_n=8):
    for n in range(1, max_n + 1):
        graphs = dict((k, g) for k, g in enumerate_with_forms(n))
        ct, forms = max_capture_time(n, graphs.values())
        shapes = Counter()
        for key in forms:
            g = graphs[key]
            r = corner_rank(g)
            shapes[f"{rank_cardinality_vector(r)} {top_heaviness(g, r)}"] += 1
        desc = ", ".join(f"{s} x{c}" if c > 1 else s for s, c in sorted(shapes.items()))
        print(f"n={n}: capture time {ct}, {len(forms)} graph(s): {desc}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 8)
