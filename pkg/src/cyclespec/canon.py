"""Exact canonical forms via individualization-refinement.

``canonical_form`` returns a byte string that is equal for two graphs if
and only if they are isomorphic.  The search refines an ordered partition
to equitability, individualizes vertices of the first non-singleton cell,
and keeps the lexicographically least packed adjacency over all discrete
leaves.  Automorphisms discovered at equal leaves prune sibling branches
through orbit merging, which keeps highly symmetric graphs (cliques,
complete bipartite graphs, long cycles) tractable.
"""

from __future__ import annotations

from .graph import Graph, _bits


def _refine(rows, n, cells):
    """Equitable refinement of an ordered partition.

    Each cell is a bitmask; cells split by the multiset of neighbour counts
    into the current cells, sub-cells ordered by count.  The result is
    deterministic and isomorphism-invariant.
    """
    cells = list(cells)
    changed = True
    while changed:
        changed = False
        for i, cell in enumerate(cells):
            if cell.bit_count() <= 1:
                continue
            key_of = {}
            for v in _bits(cell):
                key_of[v] = tuple((rows[v] & w).bit_count() for w in cells)
            groups = {}
            for v, key in key_of.items():
                groups.setdefault(key, 0)
            if len(groups) == 1:
                continue
            for v, key in key_of.items():
                groups[key] |= 1 << v
            parts = [groups[key] for key in sorted(groups)]
            cells[i : i + 1] = parts
            changed = True
            break
    return cells


def _leaf_bytes(rows, n, labeling):
    """Packed upper triangle of the relabeled graph; labeling[old] = new."""
    new_rows = [0] * n
    for old in range(n):
        acc = 0
        row = rows[old]
        for u in _bits(row):
            acc |= 1 << labeling[u]
        new_rows[labeling[old]] = acc
    out = bytearray([n])
    buf = 0
    nbits = 0
    for u in range(n):
        for v in range(u + 1, n):
            buf = buf << 1 | (new_rows[u] >> v & 1)
            nbits += 1
            if nbits == 8:
                out.append(buf)
                buf = 0
                nbits = 0
    if nbits:
        out.append(buf << (8 - nbits))
    return bytes(out)


def _is_automorphism(rows, n, perm) -> bool:
    for v in range(n):
        image = 0
        for u in _bits(rows[v]):
            image |= 1 << perm[u]
        if image != rows[perm[v]]:
            return False
    return True


def canonical_labeling(g: Graph) -> tuple:
    """A canonical relabeling (old -> new) realizing ``canonical_form``."""
    _, labeling = _canonicalize(g)
    return labeling


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-invariant byte string; equal iff graphs are isomorphic."""
    form, _ = _canonicalize(g)
    return form


def _canonicalize(g: Graph):
    n = g.n
    if n == 0:
        return b"\x00", ()
    rows = g.rows
    # Initial partition by degree, cells in increasing degree order.
    by_degree = {}
    for v in range(n):
        by_degree.setdefault(rows[v].bit_count(), 0)
    for v in range(n):
        by_degree[rows[v].bit_count()] |= 1 << v
    initial = [by_degree[d] for d in sorted(by_degree)]

    best = {"bytes": None, "labeling": None}
    generators = []

    def orbit_reps(cell, base_set):
        """Union-find orbits of the cell under generators fixing the base."""
        parent = {}

        def find(x):
            while parent.get(x, x) != x:
                parent[x] = parent.get(parent[x], parent[x])
                x = parent[x]
            return x

        usable = [p for p in generators if all(p[b] == b for b in base_set)]
        if usable:
            for p in usable:
                for x in range(n):
                    rx, ry = find(x), find(p[x])
                    if rx != ry:
                        parent[rx] = ry
        return find

    def descend(cells, base):
        cells = _refine(rows, n, cells)
        target = None
        for i, cell in enumerate(cells):
            if cell.bit_count() > 1:
                target = i
                break
        if target is None:
            labeling = [0] * n
            for pos, cell in enumerate(cells):
                labeling[(cell & -cell).bit_length() - 1] = pos
            labeling = tuple(labeling)
            leaf = _leaf_bytes(rows, n, labeling)
            if best["bytes"] is None or leaf < best["bytes"]:
                best["bytes"] = leaf
                best["labeling"] = labeling
            elif leaf == best["bytes"] and labeling != best["labeling"]:
                other = best["labeling"]
                inverse = [0] * n
                for old, new in enumerate(other):
                    inverse[new] = old
                perm = tuple(inverse[labeling[v]] for v in range(n))
                if _is_automorphism(rows, n, perm):
                    generators.append(perm)
            return
        cell = cells[target]
        explored = []
        for v in _bits(cell):
            if explored:
                find = orbit_reps(cell, base)
                if any(find(v) == find(w) for w in explored):
                    continue
            sub = cells[:target] + [1 << v, cell & ~(1 << v)] + cells[target + 1 :]
            descend(sub, base + (v,))
            explored.append(v)

    descend(initial, ())
    return best["bytes"], best["labeling"]


def isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism test: cheap invariants, then canonical forms."""
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)
