"""Quiver combinatorics: Euler form, Coxeter matrix, ADE detection, roots.

Vertices are 1-based in all public interfaces (matching the text grammar);
matrices and dimension vectors are 0-indexed internally.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from . import exactmat as xm
from .errors import (
    CyclicQuiver,
    DimensionMismatch,
    DisconnectedQuiver,
    NotDynkin,
    ParseError,
)


@dataclass(frozen=True)
class Quiver:
    """Finite acyclic quiver. arrows[(s, t)] are 1-based vertex indices."""

    n: int
    arrows: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ParseError("need at least one vertex")
        for s, t in self.arrows:
            if not (1 <= s <= self.n and 1 <= t <= self.n):
                raise ParseError("arrow endpoint out of range: %d->%d" % (s, t))
        if self.topological_order() is None:
            raise CyclicQuiver("arrow digraph has a directed cycle")

    def topological_order(self) -> tuple[int, ...] | None:
        """Kahn's algorithm; None when cyclic.  Deterministic: smallest
        available vertex first."""
        indeg = [0] * (self.n + 1)
        out = [[] for _ in range(self.n + 1)]
        for s, t in self.arrows:
            indeg[t] += 1
            out[s].append(t)
        avail = sorted(v for v in range(1, self.n + 1) if indeg[v] == 0)
        order = []
        while avail:
            v = avail.pop(0)
            order.append(v)
            for w in out[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    # insertion keeping avail sorted; lists are tiny
                    avail.append(w)
                    avail.sort()
        return tuple(order) if len(order) == self.n else None

    def arrow_counts(self) -> list[list[int]]:
        a = [[0] * self.n for _ in range(self.n)]
        for s, t in self.arrows:
            a[s - 1][t - 1] += 1
        return a

    def undirected_edges(self) -> list[tuple[int, int]]:
        return [(min(s, t), max(s, t)) for s, t in self.arrows]

    def is_connected(self) -> bool:
        if self.n == 1:
            return True
        adj = [[] for _ in range(self.n + 1)]
        for s, t in self.arrows:
            adj[s].append(t)
            adj[t].append(s)
        seen = {1}
        stack = [1]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def text(self) -> str:
        """Canonical description in the accepted grammar."""
        arrows = ",".join("%d->%d" % a for a in self.arrows)
        return "vertices:%d; arrows:%s" % (self.n, arrows)

    def fingerprint(self) -> str:
        return self.text()


@dataclass(frozen=True)
class EulerData:
    """Euler matrix E (so <d,e> = d^T E e), the Coxeter matrix, and the
    K-class action of the Serre functor (= -coxeter)."""

    euler: tuple[tuple[int, ...], ...]
    coxeter: tuple[tuple[int, ...], ...]
    serre_k_action: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class DynkinClass:
    series: str  # "A" | "D" | "E"
    rank: int
    coxeter_number: int
    fcy_pair: tuple[int, int]  # (h, h-2)


_COXETER_H = {
    ("A",): lambda n: n + 1,
    ("D",): lambda n: 2 * n - 2,
    ("E", 6): lambda n: 12,
    ("E", 7): lambda n: 18,
    ("E", 8): lambda n: 30,
}


def _bipartite_orientation(n: int, edges: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Orient tree edges color0 -> color1 (2-coloring from vertex 1), so
    every vertex is a pure source or pure sink."""
    adj = {v: [] for v in range(1, n + 1)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    color = {1: 0}
    stack = [1]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in color:
                color[w] = 1 - color[u]
                stack.append(w)
    return [(u, v) if color[u] == 0 else (v, u) for u, v in edges]


def _preset(name: str) -> Quiver | None:
    m = re.fullmatch(r"A(\d+)", name)
    if m:
        n = int(m.group(1))
        if n < 1:
            return None
        edges = [(i, i + 1) for i in range(1, n)]
        return Quiver(n, tuple(_bipartite_orientation(n, edges)))
    m = re.fullmatch(r"D(\d+)", name)
    if m:
        n = int(m.group(1))
        if n < 4:
            return None
        edges = [(i, i + 1) for i in range(1, n - 2)] + [(n - 2, n - 1), (n - 2, n)]
        return Quiver(n, tuple(_bipartite_orientation(n, edges)))
    m = re.fullmatch(r"E([678])", name)
    if m:
        n = int(m.group(1))
        edges = [(i, i + 1) for i in range(1, n - 1)] + [(3, n)]
        return Quiver(n, tuple(_bipartite_orientation(n, edges)))
    m = re.fullmatch(r"K(\d+)", name)
    if m:
        k = int(m.group(1))
        if k < 1:
            return None
        return Quiver(2, tuple((1, 2) for _ in range(k)))
    return None


def parse_quiver(text: str) -> Quiver:
    """Parse `vertices:<n>; arrows:<s>-><t>,...` (whitespace-insensitive)
    or a preset name: A<n>, D<n>, E6/E7/E8, K<m>."""
    compact = re.sub(r"\s+", "", text)
    if not compact:
        raise ParseError("empty quiver description")
    preset = _preset(compact)
    if preset is not None:
        return preset
    m = re.fullmatch(r"vertices:(\d+);arrows:((?:\d+->\d+)(?:,\d+->\d+)*)?", compact)
    if m is None:
        raise ParseError("unrecognized quiver description: %r" % text)
    n = int(m.group(1))
    arrows = []
    if m.group(2):
        for part in m.group(2).split(","):
            s, t = part.split("->")
            arrows.append((int(s), int(t)))
    return Quiver(n, tuple(arrows))


def euler_matrix(q: Quiver) -> list[list[int]]:
    """E = I - (arrow count matrix); <d,e> = d^T E e."""
    a = q.arrow_counts()
    return [[(1 if i == j else 0) - a[i][j] for j in range(q.n)] for i in range(q.n)]


def euler_form(q: Quiver, d, e) -> int:
    if len(d) != q.n or len(e) != q.n:
        raise DimensionMismatch("vectors must have length %d" % q.n)
    total = sum(int(di) * int(ei) for di, ei in zip(d, e))
    for s, t in q.arrows:
        total -= int(d[s - 1]) * int(e[t - 1])
    return total


def symmetrized_form(q: Quiver, d, e) -> int:
    return euler_form(q, d, e) + euler_form(q, e, d)


def tits_form(q: Quiver, d) -> int:
    return euler_form(q, d, d)


def coxeter_matrix(q: Quiver) -> EulerData:
    """Coxeter matrix as the K-class action of the AR translate.

    Convention Phi = -E^{-1} E^T, the one under which dim(tau M) = Phi dim M
    holds for explicit representations (cross-checked in the test suite
    against reflection-functor translates).
    """
    e = xm.from_int_rows(euler_matrix(q))
    phi = (-(xm.inverse(e) @ e.transpose()))
    phi_rows = xm.to_int_rows(phi)
    cox = tuple(tuple(r) for r in phi_rows)
    serre = tuple(tuple(-x for x in r) for r in phi_rows)
    eul = tuple(tuple(r) for r in euler_matrix(q))
    return EulerData(euler=eul, coxeter=cox, serre_k_action=serre)


def coxeter_order(q: Quiver, cap: int = 64) -> int | None:
    """Minimal m >= 1 with Phi^m = id, or None if none up to cap."""
    phi = [list(r) for r in coxeter_matrix(q).coxeter]
    n = q.n
    ident = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    power = ident
    for m in range(1, cap + 1):
        power = xm.int_mat_mul(power, phi)
        if power == ident:
            return m
    return None


def _shape_of_tree(q: Quiver) -> tuple[str, int] | None:
    """Classify the underlying simple graph as an ADE tree, or None."""
    edges = q.undirected_edges()
    if len(set(edges)) != len(edges):
        return None  # multi-edge
    if len(edges) != q.n - 1:
        return None  # tree has n-1 edges; connectedness checked by caller
    deg = [0] * (q.n + 1)
    adj = {v: [] for v in range(1, q.n + 1)}
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
        adj[u].append(v)
        adj[v].append(u)
    if any(d > 3 for d in deg[1:]):
        return None
    branches = [v for v in range(1, q.n + 1) if deg[v] == 3]
    if len(branches) > 1:
        return None
    if not branches:
        return ("A", q.n)
    b = branches[0]
    # leg lengths (edge counts) from the branch vertex
    legs = []
    for start in adj[b]:
        length = 1
        prev, cur = b, start
        while deg[cur] == 2:
            nxt = next(w for w in adj[cur] if w != prev)
            prev, cur = cur, nxt
            length += 1
        legs.append(length)
    legs.sort()
    if legs[0] != 1:
        return None
    if legs[1] == 1:
        return ("D", q.n)
    if legs[1] == 2 and legs[2] in (2, 3, 4):
        return ("E", q.n)
    return None


def classify_dynkin(q: Quiver) -> DynkinClass | None:
    """ADE class with Coxeter number, or None for non-Dynkin shapes.

    The tabulated h is cross-checked as the minimal m with Phi^m = id;
    disagreement would mean a broken Coxeter matrix, so it raises.
    """
    if not q.is_connected():
        raise DisconnectedQuiver("classification needs a connected quiver")
    shape = _shape_of_tree(q)
    if shape is None:
        return None
    series, rank = shape
    if series == "A":
        h = rank + 1
    elif series == "D":
        h = 2 * rank - 2
    else:
        if rank not in (6, 7, 8):
            return None
        h = {6: 12, 7: 18, 8: 30}[rank]
    order = coxeter_order(q, cap=h)
    if order != h:
        raise AssertionError(
            "Coxeter order cross-check failed for %s%d: expected %d, got %r"
            % (series, rank, h, order)
        )
    return DynkinClass(series=series, rank=rank, coxeter_number=h, fcy_pair=(h, h - 2))


def positive_roots(q: Quiver) -> list[tuple[int, ...]]:
    """All positive roots of the Tits form, via reflection closure.

    Start from the simple roots and close under the simple reflections
    s_i(d) = d - (d, e_i) e_i (symmetrized pairing); keep the nonnegative
    vectors.  Finite exactly in the Dynkin case, which the precondition
    guarantees.
    """
    if classify_dynkin(q) is None:
        raise NotDynkin("positive roots need an ADE quiver")
    n = q.n
    sym_rows = []
    for i in range(n):
        e_i = [0] * n
        e_i[i] = 1
        sym_rows.append([symmetrized_form(q, e_i, [1 if k == j else 0 for k in range(n)]) for j in range(n)])

    def reflect(d: tuple[int, ...], i: int) -> tuple[int, ...]:
        pairing = sum(sym_rows[i][j] * d[j] for j in range(n))
        out = list(d)
        out[i] -= pairing
        return tuple(out)

    simples = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    seen = set(simples)
    frontier = list(simples)
    while frontier:
        new = []
        for d in frontier:
            for i in range(n):
                r = reflect(d, i)
                if r not in seen:
                    seen.add(r)
                    new.append(r)
        frontier = new
    roots = sorted(d for d in seen if all(x >= 0 for x in d) and any(x > 0 for x in d))
    return roots
