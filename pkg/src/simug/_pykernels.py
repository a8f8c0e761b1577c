"""Pure-Python graph kernels.

Reference implementation of the routines in ``_kernels.pyx``; used when the
compiled extension is unavailable or ``SIMUG_PURE_PYTHON`` is set.  Both
backends take a dense 0/1 adjacency matrix indexed ``[tail][head]``.
"""
from collections import deque


def reach_matrix(adj):
    """Reflexive transitive closure: ``out[u][v] == 1`` iff v is reachable from u."""
    n = len(adj)
    succ = [[v for v in range(n) if row[v]] for row in adj]
    closure = []
    for start in range(n):
        seen = [0] * n
        seen[start] = 1
        stack = [start]
        while stack:
            u = stack.pop()
            for v in succ[u]:
                if not seen[v]:
                    seen[v] = 1
                    stack.append(v)
        closure.append(seen)
    return closure


def max_vdp(adj, sources, sinks):
    """Maximum number of vertex-disjoint paths from ``sources`` to ``sinks``.

    Unit-capacity max-flow on the split graph (v_in -> v_out for every v);
    the super-source enters at in-copies and the super-sink leaves from
    out-copies, so path endpoints consume vertex capacity and a vertex in
    both sets counts as a single-vertex path.
    """
    n = len(adj)
    succ = [[v for v in range(n) if row[v]] for row in adj]
    pred = [[u for u in range(n) if adj[u][v]] for v in range(n)]
    through = [False] * n
    src_used = [False] * n
    snk_used = [False] * n
    flow = [[False] * n for _ in range(n)]
    sink_id = 2 * n
    total = 0

    while True:
        # ids: v -> v_in, n + v -> v_out, 2n -> super-sink; -2 marks the super-source
        parent = [-1] * (2 * n + 1)
        queue = deque()
        for v in range(n):
            if sources[v] and not src_used[v]:
                parent[v] = -2
                queue.append(v)
        found = False
        while queue and not found:
            x = queue.popleft()
            if x < n:
                v = x
                if not through[v] and parent[n + v] == -1:
                    parent[n + v] = x
                    queue.append(n + v)
                for w in pred[v]:
                    if flow[w][v] and parent[n + w] == -1:
                        parent[n + w] = x
                        queue.append(n + w)
            else:
                u = x - n
                if sinks[u] and not snk_used[u]:
                    parent[sink_id] = x
                    found = True
                    break
                if through[u] and parent[u] == -1:
                    parent[u] = x
                    queue.append(u)
                for v in succ[u]:
                    if not flow[u][v] and parent[v] == -1:
                        parent[v] = x
                        queue.append(v)
        if not found:
            return total

        cur = sink_id
        prev = parent[cur]
        snk_used[prev - n] = True
        cur = prev
        while True:
            prev = parent[cur]
            if prev == -2:
                src_used[cur] = True
                break
            if prev < n and cur >= n:
                if cur - n == prev:
                    through[prev] = True
                else:
                    flow[cur - n][prev] = False
            elif prev >= n and cur < n:
                if prev - n == cur:
                    through[cur] = False
                else:
                    flow[prev - n][cur] = True
            cur = prev
        total += 1
