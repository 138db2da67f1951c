"""Canonical labeling by equitable refinement with individualization, plus graph6.

The canonical certificate is the maximal upper-triangle bitstring over the
leaves of an individualization-refinement search tree. Automorphisms found as
cert-equal leaves prune the tree (orbit pruning restricted to generators that
fix the individualized prefix, which keeps the pruning sound) and give the
automorphism group order via a Schreier-Sims chain.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass

from .graphs import Graph, mask_of

Perm = tuple[int, ...]


@dataclass(frozen=True)
class CanonicalForm:
    n: int
    cert: bytes
    group_size: int
    orbits: tuple[int, ...]       # smallest vertex of each vertex's orbit
    labeling: Perm                # original vertex -> canonical position
    generators: tuple[Perm, ...]  # generators of the automorphism group


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement; cell order depends only on invariants, so the
    procedure commutes with relabeling."""
    queue = deque(mask_of(c) for c in cells)
    while queue:
        splitter = queue.popleft()
        new_cells: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[int, list[int]] = {}
            for v in cell:
                groups.setdefault((adj[v] & splitter).bit_count(), []).append(v)
            if len(groups) == 1:
                new_cells.append(cell)
                continue
            changed = True
            for key in sorted(groups):
                sub = groups[key]
                new_cells.append(sub)
                queue.append(mask_of(sub))
        if changed:
            cells = new_cells
    return cells


def _cert_bits(adj: tuple[int, ...], perm: Perm, n: int) -> bytes:
    """Upper-triangle bitstring of the relabeled adjacency, packed MSB-first."""
    inv = [0] * n
    for v, p in enumerate(perm):
        inv[p] = v
    out = bytearray()
    acc = 0
    nbits = 0
    for i in range(n):
        vi = inv[i]
        row = adj[vi]
        for j in range(i + 1, n):
            acc = (acc << 1) | (row >> inv[j] & 1)
            nbits += 1
            if nbits == 8:
                out.append(acc)
                acc = nbits = 0
    if nbits:
        out.append(acc << (8 - nbits))
    return bytes(out)


def _compose(p: Perm, q: Perm) -> Perm:
    """p after q: v -> p[q[v]]."""
    return tuple(p[q[v]] for v in range(len(p)))


def _inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for v, pv in enumerate(p):
        inv[pv] = v
    return tuple(inv)


def _orbit_partition(n: int, gens) -> list[int]:
    """Union-find orbits of the group generated by ``gens``; root = smallest member."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                if a > b:
                    a, b = b, a
                parent[b] = a
    return [find(v) for v in range(n)]


def _group_order(n: int, gens: list[Perm]) -> int:
    """Order of <gens> via a deterministic Schreier-Sims stabilizer chain."""
    order = 1
    current = [g for g in gens if any(g[v] != v for v in range(n))]
    identity = tuple(range(n))
    for base in range(n):
        if not current:
            break
        # Orbit of the base point with a transversal.
        transversal: dict[int, Perm] = {base: identity}
        frontier = [base]
        while frontier:
            pt = frontier.pop()
            t = transversal[pt]
            for g in current:
                img = g[pt]
                if img not in transversal:
                    transversal[img] = _compose(g, t)
                    frontier.append(img)
        order *= len(transversal)
        # Schreier generators for the stabilizer of the base point.
        stab: list[Perm] = []
        seen: set[Perm] = set()
        for pt, t in transversal.items():
            for g in current:
                u = transversal[g[pt]]
                s = _compose(_inverse(u), _compose(g, t))
                if s != identity and s not in seen:
                    seen.add(s)
                    stab.append(s)
        current = stab
    return order


def _search(n: int, adj: tuple[int, ...]) -> tuple[bytes, Perm, list[Perm]]:
    best_cert: bytes | None = None
    best_perm: Perm | None = None
    best_inv: Perm | None = None
    gens: list[Perm] = []

    def leaf(cells: list[list[int]]):
        nonlocal best_cert, best_perm, best_inv
        perm = [0] * n
        for pos, cell in enumerate(cells):
            perm[cell[0]] = pos
        perm_t = tuple(perm)
        cert = _cert_bits(adj, perm_t, n)
        if best_cert is None or cert > best_cert:
            best_cert, best_perm, best_inv = cert, perm_t, _inverse(perm_t)
        elif cert == best_cert:
            # Two labelings with the same certificate differ by an automorphism.
            auto = _compose(best_inv, perm_t)
            if auto not in gens:
                gens.append(auto)

    def rec(cells: list[list[int]], prefix: list[int]):
        if all(len(c) == 1 for c in cells):
            leaf(cells)
            return
        size = max(len(c) for c in cells)
        ti = next(i for i, c in enumerate(cells) if len(c) == size)
        cell = cells[ti]
        done: list[int] = []
        for v in cell:
            if done:
                # Skip v if a known automorphism fixing the prefix maps it
                # onto an already-explored branch.
                fixing = [g for g in gens if all(g[p] == p for p in prefix)]
                if fixing:
                    orb = _orbit_partition(n, fixing)
                    if any(orb[v] == orb[u] for u in done):
                        done.append(v)
                        continue
            split = cells[:ti] + [[v], [u for u in cell if u != v]] + cells[ti + 1:]
            rec(_refine(adj, split), prefix + [v])
            done.append(v)

    rec(_refine(adj, [list(range(n))]) if n else [], [])
    if n == 0:
        return b"", (), []
    assert best_cert is not None and best_perm is not None
    return best_cert, best_perm, gens


def canonical_form(g: Graph) -> CanonicalForm:
    cert, perm, gens = _search(g.n, g.adj)
    orbits = tuple(_orbit_partition(g.n, gens))
    return CanonicalForm(
        n=g.n,
        cert=cert,
        group_size=_group_order(g.n, gens),
        orbits=orbits,
        labeling=perm,
        generators=tuple(gens),
    )


def canonical_graph(g: Graph) -> Graph:
    """The canonical representative of g's isomorphism class."""
    from .graphs import relabel

    return relabel(g, canonical_form(g).labeling)


def are_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.edge_count() != b.edge_count():
        return False
    return canonical_form(a).cert == canonical_form(b).cert


# ---------------------------------------------------------------------------
# graph6 interchange (standard short form, n <= 62)
# ---------------------------------------------------------------------------


class Graph6Error(ValueError):
    """Malformed graph6 input."""


def _triangle_pairs(n: int) -> list[tuple[int, int]]:
    """Upper-triangle entries in graph6 order: column by column."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def to_graph6(g: Graph) -> str:
    if g.n > 62:
        raise Graph6Error("graph6 short form supports at most 62 vertices")
    chars = [chr(g.n + 63)]
    acc = 0
    nbits = 0
    for i, j in _triangle_pairs(g.n):
        acc = (acc << 1) | (g.adj[i] >> j & 1)
        nbits += 1
        if nbits == 6:
            chars.append(chr(acc + 63))
            acc = nbits = 0
    if nbits:
        chars.append(chr((acc << (6 - nbits)) + 63))
    return "".join(chars)


def from_graph6(s: str) -> Graph:
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string")
    head = ord(s[0])
    if head == 126:
        raise Graph6Error("graph6 long form (n > 62) not supported")
    if not 63 <= head <= 125:
        raise Graph6Error(f"header byte {head} out of range")
    n = head - 63
    k = n * (n - 1) // 2
    need = (k + 5) // 6
    body = s[1:]
    if len(body) != need:
        raise Graph6Error(f"expected {need} data bytes for n={n}, got {len(body)}")
    bitstream = 0
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise Graph6Error(f"data byte {ord(ch)} out of range")
        bitstream = (bitstream << 6) | val
    pad = 6 * need - k
    if pad and bitstream & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    bitstream >>= pad
    rows = [0] * n
    for idx, (i, j) in enumerate(_triangle_pairs(n)):
        if bitstream >> (k - 1 - idx) & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, tuple(rows))


# ---------------------------------------------------------------------------
# Report serialization: JSON with a fixed key order
# ---------------------------------------------------------------------------


def dumps_report(payload: dict) -> str:
    """Serialize a report dict preserving insertion (documented) key order."""
    return json.dumps(payload, indent=2)


def loads_report(text: str) -> dict:
    return json.loads(text)
