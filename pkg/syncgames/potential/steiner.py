"""Exact minimum Steiner trees on small unit-weight graphs (Dreyfus-Wagner)."""

from collections import deque

from syncgames.errors import PreconditionError

Edge = tuple[int, int]


def steiner_tree(adjacency: list[list[int]], terminals: list[int]) -> tuple[int, frozenset[Edge]]:
    """
    Minimum number of edges of a tree spanning all terminals, with one optimal edge set.

    cost[mask][v] is the cheapest tree joining the terminals in mask and vertex v.
    Subsets are combined at a shared vertex, then grown along edges by a
    queue-based relaxation. Edges come back as (u, v) with u < v.
    """
    if not terminals:
        return 0, frozenset()
    inf = float("inf")
    size = len(adjacency)
    full = (1 << len(terminals)) - 1

    cost: list[list[float]] = [[inf] * size for _ in range(full + 1)]
    record: list[list[frozenset[Edge]]] = [[frozenset()] * size for _ in range(full + 1)]
    for i, t in enumerate(terminals):
        cost[1 << i][t] = 0

    for s in range(1, full + 1):
        row = cost[s]
        for v in range(size):
            ss = (s - 1) & s
            while ss:
                total = cost[ss][v] + cost[s ^ ss][v]
                if total < row[v]:
                    row[v] = total
                    record[s][v] = record[ss][v] | record[s ^ ss][v]
                ss = (ss - 1) & s
        queue = deque(v for v in range(size) if row[v] < inf)
        queued = set(queue)
        while queue:
            u = queue.popleft()
            queued.discard(u)
            for v in adjacency[u]:
                if row[u] + 1 < row[v]:
                    row[v] = row[u] + 1
                    record[s][v] = record[s][u] | {(min(u, v), max(u, v))}
                    if v not in queued:
                        queued.add(v)
                        queue.append(v)

    best = min(range(size), key=lambda v: (cost[full][v], v))
    if cost[full][best] == inf:
        raise PreconditionError("terminals are not connected")
    return int(cost[full][best]), record[full][best]
