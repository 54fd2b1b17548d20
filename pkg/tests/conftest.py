"""Shared graph constructions for the test suite."""

from itertools import combinations

from midsolve.graph import MarkedGraph, plain_graph


def complete(n, start=0):
    vs = range(start, start + n)
    return plain_graph(vs, combinations(vs, 2))


def cycle(n, start=0):
    vs = list(range(start, start + n))
    return plain_graph(vs, [(vs[i], vs[(i + 1) % n]) for i in range(n)])


def path(n, start=0):
    vs = list(range(start, start + n))
    return plain_graph(vs, [(vs[i], vs[i + 1]) for i in range(n - 1)])


def complete_bipartite(a, b):
    xs = list(range(a))
    ys = list(range(a, a + b))
    return plain_graph(xs + ys, [(x, y) for x in xs for y in ys])


def star(leaves):
    return plain_graph(range(leaves + 1), [(0, i) for i in range(1, leaves + 1)])


def from_edges(edges, marked=(), extra=()):
    verts = {v for e in edges for v in e} | set(marked) | set(extra)
    return MarkedGraph(verts - set(marked), marked, edges)
