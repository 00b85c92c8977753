"""Pure-Python search kernels.

Every function here has a twin in ``_ckernels.pyx`` with the same signature
and the same branching order, so both backends return identical results.
Adjacency is passed as a square uint8 numpy array.  Each kernel returns a
status flag as its first element: 0 for a completed search, 1 when the node
budget ran out.
"""

import numpy as np

DONE = 0
EXHAUSTED = 1


def _neighbor_lists(adj):
    return [np.flatnonzero(row).tolist() for row in adj]


def dsatur_search(adj, seed, lower, budget):
    """Exact coloring by DSATUR branch and bound.

    ``seed`` lists vertices of a clique that are pre-colored 0, 1, 2, ...
    ``lower`` is a proven lower bound; the search stops once it is met.
    Returns ``(status, k, colors, nodes)``.
    """
    n = adj.shape[0]
    if n == 0:
        return DONE, 0, [], 0
    nbrs = _neighbor_lists(adj)
    color = [-1] * n
    sat = [0] * n
    unc_deg = [len(nb) for nb in nbrs]
    counts = [[0] * (n + 1) for _ in range(n)]
    best = [n + 1]
    best_colors = [None]
    nodes = [0]
    state = [DONE]

    def assign(v, c):
        color[v] = c
        for u in nbrs[v]:
            row = counts[u]
            if row[c] == 0:
                sat[u] += 1
            row[c] += 1
            unc_deg[u] -= 1

    def unassign(v, c):
        color[v] = -1
        for u in nbrs[v]:
            row = counts[u]
            row[c] -= 1
            if row[c] == 0:
                sat[u] -= 1
            unc_deg[u] += 1

    def search(ncolored, used):
        # returns True to abort the whole search
        if ncolored == n:
            best[0] = used
            best_colors[0] = list(color)
            return used <= lower
        nodes[0] += 1
        if nodes[0] > budget:
            state[0] = EXHAUSTED
            return True
        v = -1
        bs = -1
        bd = -1
        for u in range(n):
            if color[u] < 0:
                s = sat[u]
                if s > bs or (s == bs and unc_deg[u] > bd):
                    v, bs, bd = u, s, unc_deg[u]
        row = counts[v]
        for c in range(used + 1):
            if row[c]:
                continue
            nused = used + 1 if c == used else used
            if nused >= best[0]:
                break
            assign(v, c)
            stop = search(ncolored + 1, nused)
            unassign(v, c)
            if stop:
                return True
        return False

    for i, v in enumerate(seed):
        assign(v, i)
    search(len(seed), len(seed))
    if best_colors[0] is None:
        return state[0], -1, [], nodes[0]
    return state[0], best[0], best_colors[0], nodes[0]


def max_clique_search(adj, budget):
    """Maximum clique by branch and bound with greedy-coloring bounds.

    Returns ``(status, clique, nodes)``.
    """
    n = adj.shape[0]
    if n == 0:
        return DONE, [], 0
    deg = adj.sum(axis=1).tolist()
    order = sorted(range(n), key=lambda v: (-deg[v], v))
    rows = [adj[v].tolist() for v in range(n)]
    best = [[order[0]]]
    current = []
    nodes = [0]
    state = [DONE]

    def color_sort(cand):
        classes = []
        for v in cand:
            row = rows[v]
            for cls in classes:
                for u in cls:
                    if row[u]:
                        break
                else:
                    cls.append(v)
                    break
            else:
                classes.append([v])
        verts = []
        bounds = []
        for k, cls in enumerate(classes, 1):
            verts.extend(cls)
            bounds.extend([k] * len(cls))
        return verts, bounds

    def expand(cand):
        nodes[0] += 1
        if nodes[0] > budget:
            state[0] = EXHAUSTED
            return True
        verts, bounds = color_sort(cand)
        for i in range(len(verts) - 1, -1, -1):
            if len(current) + bounds[i] <= len(best[0]):
                return False
            v = verts[i]
            row = rows[v]
            sub = [u for u in verts[:i] if row[u]]
            current.append(v)
            if not sub:
                if len(current) > len(best[0]):
                    best[0] = list(current)
            elif expand(sub):
                return True
            current.pop()
        return False

    expand(order)
    return state[0], sorted(best[0]), nodes[0]


def maximal_cliques(adj, budget):
    """Bron-Kerbosch with Tomita pivoting.

    Returns ``(status, cliques, nodes)``; each clique is a sorted list.
    """
    n = adj.shape[0]
    rows = [adj[v].tolist() for v in range(n)]
    out = []
    nodes = [0]
    state = [DONE]
    r = []

    def bk(p, x):
        nodes[0] += 1
        if nodes[0] > budget:
            state[0] = EXHAUSTED
            return True
        if not p:
            if not x:
                out.append(sorted(r))
            return False
        pivot = -1
        pbest = -1
        for u in p + x:
            row = rows[u]
            cnt = 0
            for w in p:
                if row[w]:
                    cnt += 1
            if cnt > pbest:
                pivot, pbest = u, cnt
        prow = rows[pivot]
        for v in [w for w in p if not prow[w]]:
            row = rows[v]
            r.append(v)
            stop = bk([w for w in p if row[w]], [w for w in x if row[w]])
            r.pop()
            if stop:
                return True
            p = [w for w in p if w != v]
            x = sorted(x + [v])
        return False

    if n:
        bk(list(range(n)), [])
    return state[0], out, nodes[0]


def homomorphism_search(adj_g, adj_h, order, injective, induced, limit, budget):
    """Backtracking enumeration of graph homomorphisms G -> H.

    ``order`` is the branching order on V(G).  With ``induced`` set the map
    must also send non-edges to non-edges (implies ``injective``).  Stops
    after ``limit`` maps (``limit < 0`` means no limit).
    Returns ``(status, maps, nodes)``; each map is a list image[v].
    """
    n = adj_g.shape[0]
    m = adj_h.shape[0]
    if n == 0:
        return DONE, [[]], 0
    grows = [adj_g[v].tolist() for v in range(n)]
    hrows = [adj_h[w].tolist() for w in range(m)]
    gdeg = adj_g.sum(axis=1).tolist()
    hdeg = adj_h.sum(axis=1).tolist()
    injective = injective or induced
    image = [-1] * n
    used = [False] * m
    maps = []
    nodes = [0]
    state = [DONE]

    def search(depth):
        if depth == n:
            maps.append(list(image))
            return limit >= 0 and len(maps) >= limit
        nodes[0] += 1
        if nodes[0] > budget:
            state[0] = EXHAUSTED
            return True
        v = order[depth]
        grow = grows[v]
        for w in range(m):
            if injective and used[w]:
                continue
            if induced and hdeg[w] != gdeg[v]:
                continue
            hrow = hrows[w]
            ok = True
            for i in range(depth):
                u = order[i]
                if grow[u]:
                    if not hrow[image[u]]:
                        ok = False
                        break
                elif induced and hrow[image[u]]:
                    ok = False
                    break
            if not ok:
                continue
            image[v] = w
            used[w] = True
            stop = search(depth + 1)
            used[w] = False
            image[v] = -1
            if stop:
                return True
        return False

    search(0)
    return state[0], maps, nodes[0]
