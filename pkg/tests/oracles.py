"""Brute-force reference implementations, deliberately naive.

They share no code with the package beyond reading ``Graph.adj`` and are
only used on small inputs.
"""

from fractions import Fraction
from itertools import combinations, permutations, product
from math import gcd

import sympy


def edge_set(g):
    return {(u, v) for u in range(g.n) for v in range(u + 1, g.n) if g.adj[u, v]}


def chromatic(g):
    edges = edge_set(g)
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        for col in product(range(k), repeat=g.n):
            if all(col[u] != col[v] for u, v in edges):
                return k
    raise AssertionError("unreachable")


def clique_number(g):
    best = 0
    for r in range(1, g.n + 1):
        for sub in combinations(range(g.n), r):
            if all(g.adj[u, v] for u, v in combinations(sub, 2)):
                best = r
                break
        else:
            break
    return best


def independent(g, sub):
    return all(not g.adj[u, v] for u, v in combinations(sub, 2))


def maximal_independent_sets(g):
    out = set()
    for mask in range(1 << g.n):
        sub = [v for v in range(g.n) if mask >> v & 1]
        if not independent(g, sub):
            continue
        if all(v in sub or any(g.adj[v, u] for u in sub) for v in range(g.n)):
            out.add(frozenset(sub))
    return out


def count_homomorphisms(g, h):
    edges = edge_set(g)
    return sum(all(h.adj[f[u], f[v]] for u, v in edges) for f in product(range(h.n), repeat=g.n))


def isomorphic(g1, g2):
    if g1.n != g2.n:
        return False
    e1, e2 = edge_set(g1), edge_set(g2)
    if len(e1) != len(e2):
        return False
    for p in permutations(range(g1.n)):
        if all(g2.adj[p[u], p[v]] for u, v in e1):
            return True
    return False


def girth(g):
    from collections import deque
    best = None
    for s in range(g.n):
        dist, parent = {s: 0}, {s: -1}
        q = deque([s])
        while q:
            u = q.popleft()
            for v in range(g.n):
                if not g.adj[u, v]:
                    continue
                if v not in dist:
                    dist[v], parent[v] = dist[u] + 1, u
                    q.append(v)
                elif parent[u] != v:
                    cyc = dist[u] + dist[v] + 1
                    best = cyc if best is None else min(best, cyc)
    return best


def nested(n, a, c):
    """Containment form: one of A, B lies inside one of C, D."""
    full = set(range(1, n + 1))
    b, d = full - set(a), full - set(c)
    return any(x <= y for x in (set(a), b) for y in (set(c), d))


def linked(x, y):
    (i, j), (k, l) = x, y
    return i < k < j < l or k < i < l < j


def primitive_lines(bound):
    out = set()
    for p in range(-bound, bound + 1):
        for q in range(-bound, bound + 1):
            if (p, q) != (0, 0) and gcd(p, q) == 1:
                if q < 0 or (q == 0 and p < 0):
                    p2, q2 = -p, -q
                else:
                    p2, q2 = p, q
                out.add((p2, q2))
    return out


def solve_domain_sympy(diag):
    """Integer solution of dD = d - c with D(first region) = 0, or None."""
    edges = sorted({e for r in diag.regions for e, _ in r.boundary})
    m = sympy.zeros(len(edges), len(diag.regions))
    for j, r in enumerate(diag.regions):
        for e, s in r.boundary:
            m[edges.index(e), j] += s
    rhs = sympy.Matrix([diag.curve_d.get(e, 0) - diag.curve_c.get(e, 0) for e in edges])
    sub = m[:, 1:]
    try:
        sol, params = sub.gauss_jordan_solve(rhs)
    except ValueError:
        return None
    if params.shape[0]:
        raise AssertionError("solution not unique")
    vals = [sympy.Integer(0)] + [sympy.Rational(x) for x in sol]
    assert all(v.q == 1 for v in vals)
    return tuple(int(v) for v in vals)


def measure(diag, coeffs):
    return sum((a * (Fraction(r.e) - Fraction(r.corners, 4)) for a, r in zip(coeffs, diag.regions)),
               Fraction(0))
