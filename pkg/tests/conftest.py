"""Shared independent oracles: these deliberately avoid the library's own
algorithms so they can serve as cross-checks."""

from fractions import Fraction

import pytest

from matroidkl.graphs import SimpleGraph


def all_set_partitions(items):
    """Every partition of items, by direct recursion."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in all_set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [part[i] | {first}] + part[i + 1 :]
        yield [{first}] + part


def block_is_connected(g, block):
    """BFS connectivity of an induced block, independent of graphs internals."""
    block = set(block)
    if not block:
        return False
    nbrs = {v: set() for v in block}
    for u, v in g.edges:
        if u in block and v in block:
            nbrs[u].add(v)
            nbrs[v].add(u)
    seen = set()
    todo = [next(iter(block))]
    while todo:
        v = todo.pop()
        if v in seen:
            continue
        seen.add(v)
        todo.extend(nbrs[v] - seen)
    return seen == block


def brute_force_compositions(g):
    """All connected-block partitions of V(g) by filtering set partitions."""
    out = []
    for part in all_set_partitions(range(g.n)):
        if all(block_is_connected(g, b) for b in part):
            out.append(frozenset(frozenset(b) for b in part))
    return set(out)


def motzkin_numbers(count):
    """M_0, M_1, ... via the convolution recurrence."""
    m = [1]
    while len(m) < count:
        k = len(m) - 1
        nxt = m[k] + sum(m[i] * m[k - 1 - i] for i in range(k))
        m.append(nxt)
    return m


def catalan_numbers(count):
    """C_0, C_1, ... via the convolution recurrence."""
    c = [1]
    while len(c) < count:
        c.append(sum(c[i] * c[-1 - i] for i in range(len(c))))
    return c


def random_simple_graph(rng, max_n=7):
    n = rng.randint(1, max_n)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < 0.45:
                edges.append((u, v))
    return SimpleGraph(n, edges)


@pytest.fixture
def frac():
    return Fraction
