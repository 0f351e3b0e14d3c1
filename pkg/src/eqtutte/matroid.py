"""Labeled matroids stored by explicit basis families, plus graphs and orientations.

Subsets of the ground set are bit masks over the ground order: bit ``i`` is
``ground[i]``.  Ground sets here are tiny (the tools guard at a handful of
elements), so exponential storage and scanning is the intended design.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence


class MatroidError(ValueError):
    pass


class EmptyBases(MatroidError):
    pass


class ExchangeViolation(MatroidError):
    def __init__(self, message, triple=None):
        super().__init__(message)
        self.triple = triple


class UnequalBasisSizes(ExchangeViolation):
    """Bases of different sizes; a special case of failed exchange."""


class UnknownLabel(MatroidError, KeyError):
    def __str__(self):
        return self.args[0] if self.args else "unknown label"


class LabelCollision(MatroidError):
    pass


class BadRank(MatroidError):
    pass


class GroundTooLarge(MatroidError):
    pass


class TooManyEdges(MatroidError):
    pass


class UnknownEdge(MatroidError):
    pass


class ElementClass(enum.Enum):
    LOOP = "loop"
    COLOOP = "coloop"
    GENERAL = "general"


def _remove_bit(mask: int, i: int) -> int:
    low = mask & ((1 << i) - 1)
    return low | ((mask >> (i + 1)) << i)


class Matroid:
    """A matroid on an ordered tuple of string labels.

    ``bases`` is a frozenset of bit masks.  Instances are immutable and
    hashable; two matroids are equal when they have the same ground order
    and the same basis family.
    """

    __slots__ = ("ground", "bases", "rank", "_index", "_ranks", "_hash")

    def __init__(self, ground: Sequence[str], bases: Iterable[int], *, _validated=False):
        ground = tuple(str(g) for g in ground)
        bases = frozenset(bases)
        if not _validated:
            _validate(ground, bases)
        self.ground = ground
        self.bases = bases
        self.rank = next(iter(bases)).bit_count()
        self._index = {g: i for i, g in enumerate(ground)}
        self._ranks: dict[int, int] = {}
        self._hash = None

    # construction helpers

    @classmethod
    def from_bases(cls, ground: Sequence[str], bases: Iterable[Iterable[str]]) -> "Matroid":
        ground = tuple(str(g) for g in ground)
        index = {g: i for i, g in enumerate(ground)}
        if len(index) != len(ground):
            raise LabelCollision("duplicate labels in ground set")
        if any(not g for g in ground):
            raise MatroidError("labels must be non-empty strings")
        masks = set()
        for b in bases:
            m = 0
            for e in b:
                e = str(e)
                if e not in index:
                    raise UnknownLabel(f"basis element {e!r} not in ground set")
                m |= 1 << index[e]
            masks.add(m)
        return cls(ground, masks)

    # basic queries

    @property
    def size(self) -> int:
        return len(self.ground)

    @property
    def corank(self) -> int:
        return self.size - self.rank

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    def mask(self, labels: Iterable[str]) -> int:
        m = 0
        for e in labels:
            i = self._index.get(str(e))
            if i is None:
                raise UnknownLabel(f"{e!r} is not in the ground set")
            m |= 1 << i
        return m

    def labels(self, mask: int) -> tuple[str, ...]:
        return tuple(g for i, g in enumerate(self.ground) if mask >> i & 1)

    def index(self, label: str) -> int:
        i = self._index.get(label)
        if i is None:
            raise UnknownLabel(f"{label!r} is not in the ground set")
        return i

    def rank_mask(self, mask: int) -> int:
        r = self._ranks.get(mask)
        if r is None:
            r = max((b & mask).bit_count() for b in self.bases)
            self._ranks[mask] = r
        return r

    def rank_of(self, labels: Iterable[str]) -> int:
        return self.rank_mask(self.mask(labels))

    def nullity_of(self, labels: Iterable[str]) -> int:
        m = self.mask(labels)
        return m.bit_count() - self.rank_mask(m)

    def is_independent_mask(self, mask: int) -> bool:
        return any(b & mask == mask for b in self.bases)

    def element_class(self, e: str) -> ElementClass:
        bit = 1 << self.index(e)
        hits = sum(1 for b in self.bases if b & bit)
        if hits == 0:
            return ElementClass.LOOP
        if hits == len(self.bases):
            return ElementClass.COLOOP
        return ElementClass.GENERAL

    def basis_labels(self) -> list[tuple[str, ...]]:
        """Bases as label tuples, sorted in ground order."""
        def key(m):
            return [i for i in range(self.size) if m >> i & 1]
        return [self.labels(m) for m in sorted(self.bases, key=key)]

    def independent_masks(self) -> set[int]:
        out = set()
        for b in self.bases:
            sub = b
            while True:
                out.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & b
        return out

    # minors and constructions

    def delete(self, e: str) -> "Matroid":
        """``M \\ e``; deleting a coloop drops it from every basis."""
        i = self.index(e)
        bit = 1 << i
        avoiding = [b for b in self.bases if not b & bit]
        if not avoiding:
            avoiding = [b & ~bit for b in self.bases]
        ground = self.ground[:i] + self.ground[i + 1:]
        return Matroid(ground, {_remove_bit(b, i) for b in avoiding}, _validated=True)

    def contract(self, e: str) -> "Matroid":
        """``M / e``; contracting a loop is the same as deleting it."""
        i = self.index(e)
        bit = 1 << i
        containing = [b for b in self.bases if b & bit]
        if not containing:
            return self.delete(e)
        ground = self.ground[:i] + self.ground[i + 1:]
        return Matroid(ground, {_remove_bit(b & ~bit, i) for b in containing}, _validated=True)

    def delete_set(self, labels: Iterable[str]) -> "Matroid":
        m = self
        for e in self._in_ground_order(labels):
            m = m.delete(e)
        return m

    def contract_set(self, labels: Iterable[str]) -> "Matroid":
        m = self
        for e in self._in_ground_order(labels):
            m = m.contract(e)
        return m

    def _in_ground_order(self, labels: Iterable[str]) -> list[str]:
        return list(self.labels(self.mask(labels)))

    def dual(self) -> "Matroid":
        full = self.full_mask
        return Matroid(self.ground, {full ^ b for b in self.bases}, _validated=True)

    def relabel(self, mapping: dict[str, str]) -> "Matroid":
        """Rename labels, keeping the ground order of the original positions."""
        ground = tuple(mapping.get(g, g) for g in self.ground)
        if len(set(ground)) != len(ground):
            raise LabelCollision("relabeling is not injective")
        return Matroid(ground, self.bases, _validated=True)

    def reorder(self, ground: Sequence[str]) -> "Matroid":
        """The same matroid presented in a different ground order."""
        ground = tuple(ground)
        if sorted(ground) != sorted(self.ground):
            raise MatroidError("reorder needs a permutation of the ground set")
        pos = [self.index(g) for g in ground]
        bases = set()
        for b in self.bases:
            bases.add(sum(1 << j for j, i in enumerate(pos) if b >> i & 1))
        return Matroid(ground, bases, _validated=True)

    # dunder

    def key(self):
        return (self.ground, self.bases)

    def __eq__(self, other):
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.ground == other.ground and self.bases == other.bases

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ground, self.bases))
        return self._hash

    def __repr__(self):
        bases = ", ".join("{" + ",".join(b) + "}" for b in self.basis_labels())
        return f"Matroid(ground={list(self.ground)}, rank={self.rank}, bases=[{bases}])"


def _validate(ground: tuple[str, ...], bases: frozenset[int]) -> None:
    if not bases:
        raise EmptyBases("a matroid needs at least one basis")
    sizes = {b.bit_count() for b in bases}
    if len(sizes) != 1:
        raise UnequalBasisSizes(f"bases have sizes {sorted(sizes)}")
    full = (1 << len(ground)) - 1
    if any(b & ~full for b in bases):
        raise UnknownLabel("basis uses an element outside the ground set")
    triple = find_exchange_violation(bases)
    if triple is not None:
        b1, b2, v = triple
        lab = lambda m: sorted(ground[i] for i in range(len(ground)) if m >> i & 1)
        raise ExchangeViolation(
            f"no exchange for B1={lab(b1)}, B2={lab(b2)}, v={ground[v]}",
            (lab(b1), lab(b2), ground[v]),
        )


def find_exchange_violation(bases: Iterable[int]):
    """First (B1, B2, v) with no valid exchange, or None."""
    bases = frozenset(bases)
    for b1 in bases:
        for b2 in bases:
            diff1 = b1 & ~b2
            if not diff1:
                continue
            diff2 = b2 & ~b1
            while diff1:
                vbit = diff1 & -diff1
                diff1 ^= vbit
                base = b1 ^ vbit
                ok = False
                d2 = diff2
                while d2:
                    wbit = d2 & -d2
                    d2 ^= wbit
                    if base | wbit in bases:
                        ok = True
                        break
                if not ok:
                    return b1, b2, vbit.bit_length() - 1
    return None


def matroid_from_bases(ground: Sequence[str], bases: Iterable[Iterable[str]]) -> Matroid:
    return Matroid.from_bases(ground, bases)


def rank_of(M: Matroid, labels: Iterable[str]) -> int:
    return M.rank_of(labels)


def nullity_of(M: Matroid, labels: Iterable[str]) -> int:
    return M.nullity_of(labels)


def delete(M: Matroid, e: str) -> Matroid:
    return M.delete(e)


def contract(M: Matroid, e: str) -> Matroid:
    return M.contract(e)


def dual(M: Matroid) -> Matroid:
    return M.dual()


def element_class(M: Matroid, e: str) -> ElementClass:
    return M.element_class(e)


def direct_sum(M: Matroid, N: Matroid) -> Matroid:
    clash = set(M.ground) & set(N.ground)
    if clash:
        raise LabelCollision(f"shared labels {sorted(clash)}")
    shift = M.size
    bases = {bm | (bn << shift) for bm in M.bases for bn in N.bases}
    return Matroid(M.ground + N.ground, bases, _validated=True)


def empty_matroid() -> Matroid:
    return Matroid((), {0}, _validated=True)


def lex_first_basis(M: Matroid, sigma: Sequence[str]) -> frozenset[str]:
    """Greedy basis scanning the ground set in the order ``sigma``."""
    if sorted(sigma) != sorted(M.ground):
        raise MatroidError("sigma must be a permutation of the ground set")
    return frozenset(M.labels(lex_first_mask(M, sigma)))


def lex_first_mask(M: Matroid, sigma: Sequence[str]) -> int:
    current = 0
    for e in sigma:
        trial = current | (1 << M.index(e))
        if M.is_independent_mask(trial):
            current = trial
    return current


def uniform(k: int, ground: Sequence[str]) -> Matroid:
    ground = tuple(str(g) for g in ground)
    n = len(ground)
    if not 0 <= k <= n:
        raise BadRank(f"rank {k} outside 0..{n}")
    bases = {sum(1 << i for i in c) for c in combinations(range(n), k)}
    return Matroid(ground, bases, _validated=True)


def loop_matroid(label: str = "e") -> Matroid:
    return Matroid((label,), {0}, _validated=True)


def coloop_matroid(label: str = "e") -> Matroid:
    return Matroid((label,), {1}, _validated=True)


# graphs


@dataclass(frozen=True)
class Edge:
    label: str
    u: str
    v: str


@dataclass(frozen=True)
class Graph:
    """Multigraph with labeled edges; parallel edges and self-loops allowed."""

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...] = field(default=())

    def __post_init__(self):
        verts = set(self.vertices)
        if len(verts) != len(self.vertices):
            raise MatroidError("duplicate vertex identifiers")
        labels = [e.label for e in self.edges]
        if len(set(labels)) != len(labels):
            raise LabelCollision("edge labels must be unique")
        for e in self.edges:
            if e.u not in verts or e.v not in verts:
                raise MatroidError(f"edge {e.label} references an undeclared vertex")

    @classmethod
    def build(cls, vertices: Iterable, edges: Iterable[tuple]) -> "Graph":
        return cls(tuple(str(v) for v in vertices), tuple(Edge(str(l), str(u), str(v)) for l, u, v in edges))

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(e.label for e in self.edges)

    def edge(self, label: str) -> Edge:
        for e in self.edges:
            if e.label == label:
                return e
        raise UnknownEdge(f"no edge labelled {label!r}")

    def components(self, edge_mask: int | None = None) -> int:
        parent = {v: v for v in self.vertices}

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        count = len(self.vertices)
        for i, e in enumerate(self.edges):
            if edge_mask is not None and not edge_mask >> i & 1:
                continue
            ra, rb = find(e.u), find(e.v)
            if ra != rb:
                parent[ra] = rb
                count -= 1
        return count

    def is_forest(self, edge_mask: int) -> bool:
        return self.components(edge_mask) == len(self.vertices) - edge_mask.bit_count()


def graphic(G: Graph) -> Matroid:
    """Cycle matroid: bases are the spanning forests."""
    n = len(G.edges)
    rank = len(G.vertices) - G.components()
    bases = {sum(1 << i for i in c) for c in combinations(range(n), rank)}
    bases = {b for b in bases if G.is_forest(b)}
    return Matroid(G.labels, bases, _validated=True)


# orientation oracles

MAX_ORIENTATION_EDGES = 12


def _arcs(G: Graph, flips: Sequence[bool], bidirected: Iterable[int] = ()) -> list[tuple[str, str]]:
    arcs = []
    both = set(bidirected)
    for i, e in enumerate(G.edges):
        if i in both:
            arcs.append((e.u, e.v))
            arcs.append((e.v, e.u))
        elif flips[i]:
            arcs.append((e.v, e.u))
        else:
            arcs.append((e.u, e.v))
    return arcs


def _acyclic(vertices: Sequence[str], arcs: list[tuple[str, str]]) -> bool:
    indeg = {v: 0 for v in vertices}
    out: dict[str, list[str]] = {v: [] for v in vertices}
    for a, b in arcs:
        if a == b:
            return False
        out[a].append(b)
        indeg[b] += 1
    stack = [v for v in vertices if indeg[v] == 0]
    seen = 0
    while stack:
        v = stack.pop()
        seen += 1
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                stack.append(w)
    return seen == len(vertices)


def _reach(start: str, adj: dict[str, list[str]]) -> set[str]:
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def _strongly_connected(vertices: Sequence[str], arcs: list[tuple[str, str]]) -> bool:
    if not vertices:
        return True
    fwd: dict[str, list[str]] = {v: [] for v in vertices}
    bwd: dict[str, list[str]] = {v: [] for v in vertices}
    for a, b in arcs:
        fwd[a].append(b)
        bwd[b].append(a)
    root = vertices[0]
    return len(_reach(root, fwd)) == len(vertices) == len(_reach(root, bwd))


def _edge_indices(G: Graph, A: Iterable[str]) -> set[int]:
    labels = G.labels
    out = set()
    for a in A:
        if a not in labels:
            raise UnknownEdge(f"no edge labelled {a!r}")
        out.add(labels.index(a))
    return out


def _guard_edges(G: Graph) -> None:
    if len(G.edges) > MAX_ORIENTATION_EDGES:
        raise TooManyEdges(f"{len(G.edges)} edges exceeds the limit of {MAX_ORIENTATION_EDGES}")


def count_acyclic_orientations_free_set(G: Graph, A: Iterable[str] = ()) -> int:
    """Orientations of E\\A that stay acyclic under every orientation of A."""
    _guard_edges(G)
    fixed = _edge_indices(G, A)
    free = [i for i in range(len(G.edges)) if i not in fixed]
    count = 0
    for free_flips in product((False, True), repeat=len(free)):
        flips = [False] * len(G.edges)
        for i, f in zip(free, free_flips):
            flips[i] = f
        ok = True
        for a_flips in product((False, True), repeat=len(fixed)):
            for i, f in zip(sorted(fixed), a_flips):
                flips[i] = f
            if not _acyclic(G.vertices, _arcs(G, flips)):
                ok = False
                break
        if ok:
            count += 1
    return count


def count_strongly_connected_bidirected(G: Graph, A: Iterable[str] = ()) -> int:
    """Strongly connected orientations of E\\A with every edge of A bidirected."""
    _guard_edges(G)
    if G.components() != 1:
        raise MatroidError("strong connectivity count needs a connected graph")
    fixed = _edge_indices(G, A)
    free = [i for i in range(len(G.edges)) if i not in fixed]
    count = 0
    for free_flips in product((False, True), repeat=len(free)):
        flips = [False] * len(G.edges)
        for i, f in zip(free, free_flips):
            flips[i] = f
        if _strongly_connected(G.vertices, _arcs(G, flips, fixed)):
            count += 1
    return count


# enumeration

MAX_ENUMERATION_GROUND = 5


def enumerate_labeled_matroids(ground: Sequence[str]) -> Iterator[Matroid]:
    """Every matroid on ``ground``, each exactly once.

    Order: by rank, then by the family code (bit ``j`` set when the ``j``-th
    ``k``-subset in combinations order is a basis).
    """
    ground = tuple(str(g) for g in ground)
    n = len(ground)
    if n > MAX_ENUMERATION_GROUND:
        raise GroundTooLarge(f"enumeration is limited to {MAX_ENUMERATION_GROUND} elements")
    for k in range(n + 1):
        candidates = [sum(1 << i for i in c) for c in combinations(range(n), k)]
        for code in range(1, 1 << len(candidates)):
            family = frozenset(c for j, c in enumerate(candidates) if code >> j & 1)
            if find_exchange_violation(family) is None:
                yield Matroid(ground, family, _validated=True)


def default_ground(n: int) -> tuple[str, ...]:
    return tuple(str(i) for i in range(n))
