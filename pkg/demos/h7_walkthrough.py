"""Walk through the seven-vertex graph H7: its corner ranks, its level
graphs, and an optimal pursuit played out move by move."""

from copwin import (
    capture_time_by_game,
    capture_time_by_rank,
    corner_rank,
    named_graph,
    rank_cardinality_vector,
    solve_game,
    top_heaviness,
)


def main():
    g = named_graph("H7")
    r = corner_rank(g)
    print("corner ranks:")
    for v in range(g.n):
        print(f"  {g.labels[v]:>3}  {r.ranks[v]}")
    print("vector", rank_cardinality_vector(r), "top", top_heaviness(g, r))

    # peeling off rank-1 vertices repeatedly leaves smaller cop-win graphs
    for k in range(1, r.alpha + 1):
        sub, keep = r.level_graph(k)
        print(f"G^({k}) keeps {[g.labels[v] for v in keep]}")

    print("capture time from ranks:", capture_time_by_rank(g, r))
    print("capture time from the game:", capture_time_by_game(g))

    t = solve_game(g)
    idx = {g.labels[v]: v for v in range(g.n)}
    cop, robber = idx["a1"], idx["c1"]
    print(f"\ncop at a1, robber at c1, value {t(cop, robber)}")
    while cop != robber:
        cop = t.best_cop_move(cop, robber)
        if cop == robber:
            print(f"  cop steps to {g.labels[cop]} and captures")
            break
        # robber picks the reply that keeps the game going longest
        robber = max(
            (u for u in range(g.n) if g.closed(robber) >> u & 1),
            key=lambda u: -1 if u == cop else t(cop, u),
        )
        print(f"  cop -> {g.labels[cop]}, robber -> {g.labels[robber]}, value now {t(cop, robber)}")


if __name__ == "__main__":
    main()
