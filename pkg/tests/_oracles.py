"""Deliberately naive reference implementations used to cross-check the engine.

Everything here works on plain sets and edge lists, never on bitmasks, and
re-derives each quantity straight from its definition.  Slow on purpose;
only run at tiny orders.
"""

from itertools import combinations


def adjacency(n, edges):
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def subsets(n):
    for k in range(n + 1):
        yield from (set(c) for c in combinations(range(n), k))


def standard_close(n, edges, start):
    adj = adjacency(n, edges)
    blue = set(start)
    changed = True
    while changed:
        changed = False
        for u in sorted(blue):
            white = adj[u] - blue
            if len(white) == 1:
                blue |= white
                changed = True
                break
    return blue


def skew_close(n, edges, start):
    adj = adjacency(n, edges)
    blue = set(start)
    changed = True
    while changed:
        changed = False
        for u in range(n):
            white = adj[u] - blue
            if len(white) == 1:
                blue |= white
                changed = True
                break
    return blue


def _components(vertices, adj):
    left = set(vertices)
    comps = []
    while left:
        v = min(left)
        comp = {v}
        frontier = [v]
        while frontier:
            u = frontier.pop()
            for w in adj[u] & left:
                if w not in comp:
                    comp.add(w)
                    frontier.append(w)
        comps.append(comp)
        left -= comp
    return comps


def psd_close(n, edges, start):
    adj = adjacency(n, edges)
    blue = set(start)
    changed = True
    while changed:
        changed = False
        white = set(range(n)) - blue
        for comp in _components(white, adj):
            for u in sorted(blue):
                inside = adj[u] & comp
                if len(inside) == 1:
                    blue |= inside
                    changed = True
                    break
            if changed:
                break
    return blue


def is_standard_fort(n, edges, fort):
    if not fort:
        return False
    adj = adjacency(n, edges)
    return all(len(adj[v] & fort) != 1 for v in set(range(n)) - fort)


def is_skew_fort(n, edges, fort):
    if not fort:
        return False
    adj = adjacency(n, edges)
    return all(len(adj[v] & fort) != 1 for v in range(n))


def is_psd_fort(n, edges, fort):
    if not fort:
        return False
    adj = adjacency(n, edges)
    return all(
        is_standard_fort(n, edges, comp) for comp in _components(fort, adj)
    )


def blocking_family(n, edges, parameter):
    """The designated blocking family of the parameter, as a list of frozensets."""
    adj = adjacency(n, edges)
    if parameter == "standard":
        return [frozenset(f) for f in subsets(n) if is_standard_fort(n, edges, f)]
    if parameter == "psd":
        return [
            frozenset(f)
            for f in subsets(n)
            if is_psd_fort(n, edges, f) and len(_components(f, adj)) == 1
        ]
    if parameter == "skew":
        return [frozenset(f) for f in subsets(n) if is_skew_fort(n, edges, f)]
    if parameter == "domination":
        return sorted({frozenset(adj[v] | {v}) for v in range(n)}, key=sorted)
    if parameter == "vertex_cover":
        return [frozenset(e) for e in edges]
    raise ValueError(parameter)


def is_xir(family, s):
    return all(any(set(r) & s == {u} for r in family) for u in s)


def maximal_xir_sets(n, family):
    out = []
    for s in subsets(n):
        if not is_xir(family, s):
            continue
        if all(not is_xir(family, s | {v}) for v in set(range(n)) - s):
            out.append(frozenset(s))
    return out


def is_x_set(family, s):
    return all(set(r) & s for r in family)


def four_numbers(n, edges, parameter):
    """(xir, x, x_upper, xir_upper) straight from the definitions."""
    family = blocking_family(n, edges, parameter)
    maximal = maximal_xir_sets(n, family)
    x_sets = [s for s in subsets(n) if is_x_set(family, s)]
    minimal_x = [
        s for s in x_sets if all(not is_x_set(family, s - {v}) for v in s)
    ]
    return (
        min(len(s) for s in maximal),
        min(len(s) for s in x_sets),
        max(len(s) for s in minimal_x),
        max(len(s) for s in maximal),
    )


def vertex_cover_number(n, edges):
    return min(len(s) for s in subsets(n) if all(set(e) & s for e in edges))


def domination_number(n, edges):
    adj = adjacency(n, edges)
    return min(
        len(s)
        for s in subsets(n)
        if set().union(*({v} | adj[v] for v in s)) == set(range(n))
    ) if n else 0


def independence_number(n, edges):
    adj = adjacency(n, edges)
    return max(len(s) for s in subsets(n) if all(not adj[v] & s for v in s))
