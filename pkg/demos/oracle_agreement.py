"""Two independent ways to get the capture time (rank formula vs. solving the
game outright) compared over every connected graph up to a given order."""

import sys
import time

from copwin import INFINITY, capture_time_by_game, capture_time_by_rank, enumerate_connected


def main(max_n=7):
    for n in range(1, max_n + 1):
        t = time.perf_counter()
        total = copwin = disagree = 0
        spread = {}
        for g in enumerate_connected(n):
            total += 1
            a, b = capture_time_by_rank(g), capture_time_by_game(g)
            disagree += a != b
            if b is not INFINITY:
                copwin += 1
                spread[b] = spread.get(b, 0) + 1
        dt = time.perf_counter() - t
        print(f"n={n}: {total:5d} graphs, {copwin:4d} cop-win, capture times {dict(sorted(spread.items()))}, "
              f"disagreements {disagree} ({dt:.2f}s)")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 7)
