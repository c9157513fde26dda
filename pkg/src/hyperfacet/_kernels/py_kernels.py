"""Pure-Python kernel implementations.

Fallback used when the compiled extension is unavailable (or forced via
HYPERFACET_PURE_PYTHON=1). Semantics and outputs must match _ckernels
exactly; both are exercised against each other in the test suite.

All kernels work on interned integer ids. Rows are sorted lists of unique
ints; the caller owns the string <-> int mapping.
"""

from __future__ import annotations


def edge_components(n_vertices: int, edge_rows: list[list[int]]) -> tuple[list[int], list[int]]:
    """Union-find over vertices joined by shared hyperedge membership.

    Returns (vertex_labels, edge_labels). Labels are dense component ids
    assigned by first appearance in vertex-index order, so label 0 is the
    component of vertex 0. Empty rows get edge label -1.
    """
    parent = list(range(n_vertices))

    def find(x: int) -> int:
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for row in edge_rows:
        if len(row) < 2:
            continue
        ra = find(row[0])
        for m in row[1:]:
            rb = find(m)
            if rb != ra:
                if rb < ra:
                    ra, rb = rb, ra
                parent[rb] = ra

    labels: dict[int, int] = {}
    vertex_labels = []
    for v in range(n_vertices):
        vertex_labels.append(labels.setdefault(find(v), len(labels)))
    edge_labels = [vertex_labels[row[0]] if row else -1 for row in edge_rows]
    return vertex_labels, edge_labels


def union_rows(groups: list[list[int]], rows: list[list[int]], n_symbols: int) -> list[list[int]]:
    """Per group, the sorted deduplicated union of the referenced rows.

    `n_symbols` bounds the symbol alphabet (used by the compiled stamp
    buffer); it is not needed here but kept for signature parity.
    """
    out = []
    for grp in groups:
        if not grp:
            out.append([])
        elif len(grp) == 1:
            out.append(list(rows[grp[0]]))
        else:
            acc: set[int] = set()
            for r in grp:
                acc.update(rows[r])
            out.append(sorted(acc))
    return out


def group_rows(rows: list[list[int]]) -> list[int]:
    """Group identical rows; group ids assigned by first occurrence."""
    seen: dict[tuple[int, ...], int] = {}
    return [seen.setdefault(tuple(row), len(seen)) for row in rows]
