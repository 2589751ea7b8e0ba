"""Shared brute-force oracles, written independently of the library code.

The strong-cover filter below recomputes adjacency and the cover layers
from the raw edge list on purpose: it is the reference the library's
enumeration is checked against, so it must not reuse that code path.
"""

from __future__ import annotations

import itertools

from oriented_ideals import Monomial, WeightedOrientedGraph


def brute_force_strong_covers(g: WeightedOrientedGraph) -> list[frozenset[str]]:
    """Filter all vertex subsets by the strong-cover definition, literally."""
    vs = list(g.vertices)
    out = {v: set() for v in vs}
    inc = {v: set() for v in vs}
    for tail, head in g.edges:
        out[tail].add(head)
        inc[head].add(tail)
    weights = g.weights

    found = []
    for r in range(len(vs) + 1):
        for combo in itertools.combinations(vs, r):
            c = set(combo)
            if not all(t in c or h in c for t, h in g.edges):
                continue
            l1 = {v for v in c if out[v] - c}
            l2 = {v for v in c - l1 if inc[v] - c}
            l3 = c - l1 - l2
            feeders = (l2 | l3)
            good = all(
                any(u in feeders and weights[u] >= 2 for u in inc[x])
                for x in l3
            )
            if good:
                found.append(frozenset(c))
    return found


def all_monomials_up_to(variables: tuple[str, ...], max_degree: int) -> list[Monomial]:
    """Every monomial in the given variables of total degree <= max_degree."""
    out = []

    def build(idx: int, remaining: int, exps: dict[str, int]) -> None:
        if idx == len(variables):
            out.append(Monomial(exps))
            return
        for e in range(remaining + 1):
            if e:
                exps[variables[idx]] = e
            build(idx + 1, remaining - e, exps)
            exps.pop(variables[idx], None)

    build(0, max_degree, {})
    return out


def brute_force_member(
    generators, m: Monomial, variables: tuple[str, ...]
) -> bool:
    """Is m a generator times some monomial?  Checked by enumeration."""
    for g in generators:
        slack = m.degree - g.degree
        if slack < 0:
            continue
        for u in all_monomials_up_to(variables, slack):
            if g * u == m:
                return True
    return False
