"""Independent brute-force oracle.

Everything here materializes the defining sets directly on plain dicts of
sets, with no imports from the package under test. Inputs use the shape
entities[ref][type] = set(values).
"""

from __future__ import annotations


def ref_values(entities, search, ref_type):
    """All values of the reference type over the search set."""
    out = set()
    for r in search:
        out |= entities[r].get(ref_type, set())
    return out


def refs_of_value(entities, search, ref_type, value):
    """References in the search set carrying the value."""
    return {r for r in search if value in entities[r].get(ref_type, set())}


def raw_facet(entities, search, cooc_type, ref_type):
    """(vertex set, {reference value: co-occurrence edge}) by definition."""
    vertices = set()
    for r in search:
        vertices |= entities[r].get(cooc_type, set())
    edges = {}
    for v in ref_values(entities, search, ref_type):
        edge = set()
        for r in refs_of_value(entities, search, ref_type, v):
            edge |= entities[r].get(cooc_type, set())
        edges[v] = frozenset(edge)
    return vertices, edges


def reduce_raw(edges):
    """{member set: set of reference values} quotient by equal images."""
    classes = {}
    for v, members in edges.items():
        classes.setdefault(frozenset(members), set()).add(v)
    return classes


def switch(entities, search, cooc_type, ref_type, selection, target_type):
    """The full switch chain: restricted reduced edges, class union,
    reference values, physical references, then the restricted raw facet
    of the target type. Returns (ref_values, refs, vertices, edges)."""
    _, raw = raw_facet(entities, search, cooc_type, ref_type)
    classes = reduce_raw(raw)
    touched = [members for members in classes if members & set(selection)]
    values = set()
    for members in touched:
        values |= classes[members]
    refs = set()
    for v in values:
        refs |= refs_of_value(entities, search, ref_type, v)
    vertices = set()
    for r in refs:
        vertices |= entities[r].get(target_type, set())
    edges = {}
    for v in values:
        edge = set()
        for r in refs_of_value(entities, search, ref_type, v):
            edge |= entities[r].get(target_type, set())
        edges[v] = frozenset(edge)
    return values, refs, vertices, edges


def components_closure(vertex_ids, edge_members):
    """Connected components by transitive-closure fixpoint.

    edge_members: list of (edge id, member set). Returns a set of
    (frozenset vertices, frozenset edge ids) pairs; empty edges belong to
    no component and isolated vertices form singletons.
    """
    remaining = set(vertex_ids)
    nonempty = [(eid, set(ms)) for eid, ms in edge_members if ms]
    out = set()
    while remaining:
        seed = min(remaining)
        comp = {seed}
        changed = True
        while changed:
            changed = False
            for _, ms in nonempty:
                if ms & comp and not ms <= comp:
                    comp |= ms
                    changed = True
        eids = frozenset(eid for eid, ms in nonempty if ms <= comp)
        out.add((frozenset(comp), eids))
        remaining -= comp
    return out


def brute_search(entities, all_terms, any_terms):
    """Scan every entity against the query."""
    out = set()
    for r, attrs in entities.items():
        if all(v in attrs.get(t, set()) for t, v in all_terms):
            if not any_terms or any(v in attrs.get(t, set()) for t, v in any_terms):
                out.add(r)
    return out
