# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels.

Mirrors ``_pykernels`` branch for branch; see there for the contracts.
"""

import numpy as np
cimport numpy as cnp

cnp.import_array()

cdef enum:
    DONE = 0
    EXHAUSTED = 1


cdef class _Dsatur:
    cdef int n
    cdef long long budget, nodes
    cdef int lower, best, status
    cdef int[:] indptr
    cdef int[:] indices
    cdef int[:] color
    cdef int[:] sat
    cdef int[:] unc_deg
    cdef int[:, :] counts
    cdef object best_colors

    cdef void assign(self, int v, int c):
        cdef int k, u
        self.color[v] = c
        for k in range(self.indptr[v], self.indptr[v + 1]):
            u = self.indices[k]
            if self.counts[u, c] == 0:
                self.sat[u] += 1
            self.counts[u, c] += 1
            self.unc_deg[u] -= 1

    cdef void unassign(self, int v, int c):
        cdef int k, u
        self.color[v] = -1
        for k in range(self.indptr[v], self.indptr[v + 1]):
            u = self.indices[k]
            self.counts[u, c] -= 1
            if self.counts[u, c] == 0:
                self.sat[u] -= 1
            self.unc_deg[u] += 1

    cdef bint search(self, int ncolored, int used):
        cdef int v, u, s, bs, bd, c, nused
        cdef bint stop
        if ncolored == self.n:
            self.best = used
            self.best_colors = np.asarray(self.color).tolist()
            return used <= self.lower
        self.nodes += 1
        if self.nodes > self.budget:
            self.status = EXHAUSTED
            return True
        v = -1
        bs = -1
        bd = -1
        for u in range(self.n):
            if self.color[u] < 0:
                s = self.sat[u]
                if s > bs or (s == bs and self.unc_deg[u] > bd):
                    v = u
                    bs = s
                    bd = self.unc_deg[u]
        for c in range(used + 1):
            if self.counts[v, c]:
                continue
            nused = used + 1 if c == used else used
            if nused >= self.best:
                break
            self.assign(v, c)
            stop = self.search(ncolored + 1, nused)
            self.unassign(v, c)
            if stop:
                return True
        return False


def dsatur_search(adj, seed, int lower, long long budget):
    cdef int n = adj.shape[0]
    if n == 0:
        return DONE, 0, [], 0
    a = np.ascontiguousarray(adj, dtype=np.uint8)
    deg = a.sum(axis=1).astype(np.int32)
    cdef _Dsatur st = _Dsatur()
    st.n = n
    st.budget = budget
    st.nodes = 0
    st.lower = lower
    st.best = n + 1
    st.status = DONE
    st.best_colors = None
    st.indptr = np.concatenate([[0], np.cumsum(deg)]).astype(np.int32)
    st.indices = np.nonzero(a)[1].astype(np.int32)
    st.color = np.full(n, -1, dtype=np.int32)
    st.sat = np.zeros(n, dtype=np.int32)
    st.unc_deg = deg.copy()
    st.counts = np.zeros((n, n + 1), dtype=np.int32)
    cdef int i
    for i, v in enumerate(seed):
        st.assign(v, i)
    st.search(len(seed), len(seed))
    if st.best_colors is None:
        return st.status, -1, [], st.nodes
    return st.status, st.best, st.best_colors, st.nodes


cdef class _MaxClique:
    cdef const unsigned char[:, :] adj
    cdef long long budget, nodes
    cdef int status
    cdef list best
    cdef list current

    cdef tuple color_sort(self, list cand):
        cdef list classes = []
        cdef list cls
        cdef int v, u, k
        cdef bint placed, clash
        for v in cand:
            placed = False
            for cls in classes:
                clash = False
                for u in cls:
                    if self.adj[v, u]:
                        clash = True
                        break
                if not clash:
                    cls.append(v)
                    placed = True
                    break
            if not placed:
                classes.append([v])
        cdef list verts = []
        cdef list bounds = []
        k = 0
        for cls in classes:
            k += 1
            verts.extend(cls)
            bounds.extend([k] * len(cls))
        return verts, bounds

    cdef bint expand(self, list cand):
        cdef list verts, bounds, sub
        cdef int i, v, u
        self.nodes += 1
        if self.nodes > self.budget:
            self.status = EXHAUSTED
            return True
        verts, bounds = self.color_sort(cand)
        for i in range(len(verts) - 1, -1, -1):
            if len(self.current) + <int>bounds[i] <= len(self.best):
                return False
            v = verts[i]
            sub = [u for u in verts[:i] if self.adj[v, u]]
            self.current.append(v)
            if not sub:
                if len(self.current) > len(self.best):
                    self.best = list(self.current)
            elif self.expand(sub):
                return True
            self.current.pop()
        return False


def max_clique_search(adj, long long budget):
    cdef int n = adj.shape[0]
    if n == 0:
        return DONE, [], 0
    a = np.ascontiguousarray(adj, dtype=np.uint8)
    deg = a.sum(axis=1).tolist()
    order = sorted(range(n), key=lambda v: (-deg[v], v))
    cdef _MaxClique st = _MaxClique()
    st.adj = a
    st.budget = budget
    st.nodes = 0
    st.status = DONE
    st.best = [order[0]]
    st.current = []
    st.expand(order)
    return st.status, sorted(st.best), st.nodes


cdef class _BronKerbosch:
    cdef const unsigned char[:, :] adj
    cdef long long budget, nodes
    cdef int status
    cdef list out
    cdef list r

    cdef bint bk(self, list p, list x):
        cdef int u, w, v, pivot, pbest, cnt
        cdef list cands
        self.nodes += 1
        if self.nodes > self.budget:
            self.status = EXHAUSTED
            return True
        if not p:
            if not x:
                self.out.append(sorted(self.r))
            return False
        pivot = -1
        pbest = -1
        for u in p + x:
            cnt = 0
            for w in p:
                if self.adj[u, w]:
                    cnt += 1
            if cnt > pbest:
                pivot = u
                pbest = cnt
        cands = [w for w in p if not self.adj[pivot, w]]
        for v in cands:
            self.r.append(v)
            stop = self.bk([w for w in p if self.adj[v, w]],
                           [w for w in x if self.adj[v, w]])
            self.r.pop()
            if stop:
                return True
            p = [w for w in p if w != v]
            x = sorted(x + [v])
        return False


def maximal_cliques(adj, long long budget):
    cdef int n = adj.shape[0]
    cdef _BronKerbosch st = _BronKerbosch()
    st.adj = np.ascontiguousarray(adj, dtype=np.uint8)
    st.budget = budget
    st.nodes = 0
    st.status = DONE
    st.out = []
    st.r = []
    if n:
        st.bk(list(range(n)), [])
    return st.status, st.out, st.nodes


cdef class _Homs:
    cdef const unsigned char[:, :] g
    cdef const unsigned char[:, :] h
    cdef int n, m, limit, status
    cdef bint injective, induced
    cdef long long budget, nodes
    cdef int[:] order
    cdef int[:] image
    cdef int[:] gdeg
    cdef int[:] hdeg
    cdef unsigned char[:] used
    cdef list maps

    cdef bint search(self, int depth):
        cdef int v, w, i, u
        cdef bint ok, stop
        if depth == self.n:
            self.maps.append(np.asarray(self.image).tolist())
            return self.limit >= 0 and len(self.maps) >= self.limit
        self.nodes += 1
        if self.nodes > self.budget:
            self.status = EXHAUSTED
            return True
        v = self.order[depth]
        for w in range(self.m):
            if self.injective and self.used[w]:
                continue
            if self.induced and self.hdeg[w] != self.gdeg[v]:
                continue
            ok = True
            for i in range(depth):
                u = self.order[i]
                if self.g[v, u]:
                    if not self.h[w, self.image[u]]:
                        ok = False
                        break
                elif self.induced and self.h[w, self.image[u]]:
                    ok = False
                    break
            if not ok:
                continue
            self.image[v] = w
            self.used[w] = 1
            stop = self.search(depth + 1)
            self.used[w] = 0
            self.image[v] = -1
            if stop:
                return True
        return False


def homomorphism_search(adj_g, adj_h, order, bint injective, bint induced,
                        int limit, long long budget):
    cdef int n = adj_g.shape[0]
    if n == 0:
        return DONE, [[]], 0
    g = np.ascontiguousarray(adj_g, dtype=np.uint8)
    h = np.ascontiguousarray(adj_h, dtype=np.uint8)
    cdef _Homs st = _Homs()
    st.g = g
    st.h = h
    st.n = n
    st.m = h.shape[0]
    st.limit = limit
    st.status = DONE
    st.injective = injective or induced
    st.induced = induced
    st.budget = budget
    st.nodes = 0
    st.order = np.asarray(order, dtype=np.int32)
    st.image = np.full(n, -1, dtype=np.int32)
    st.gdeg = g.sum(axis=1).astype(np.int32)
    st.hdeg = h.sum(axis=1).astype(np.int32)
    st.used = np.zeros(st.m, dtype=np.uint8)
    st.maps = []
    st.search(0)
    return st.status, st.maps, st.nodes
