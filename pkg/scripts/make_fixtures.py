"""Regenerate the graph6 corpora under tests/fixtures/.

Provenance:
  all_n{0..7}.g6       networkx.graph_atlas_g() (the Read & Wilson atlas of
                       all graphs on at most 7 vertices, one per iso class)
  trees_n{1..8}.g6     networkx.nonisomorphic_trees (n = 1 written directly)
  unicyclic_n{3..8}.g6 every tree on n vertices plus one non-edge, deduplicated
                       up to isomorphism with networkx.is_isomorphic

networkx is only needed to run this script; the package never imports it.
"""

from pathlib import Path

import networkx as nx

OUT = Path(__file__).resolve().parent.parent / "tests" / "fixtures"


def g6(g):
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def write(name, graphs):
    lines = [g6(g) for g in graphs]
    (OUT / name).write_text("".join(line + "\n" for line in lines))
    print(f"{name}: {len(lines)}")


def trees(n):
    if n == 1:
        return [nx.empty_graph(1)]
    return [nx.convert_node_labels_to_integers(t) for t in nx.nonisomorphic_trees(n)]


def unicyclic(n):
    found = []
    for t in trees(n):
        for u, v in nx.non_edges(t):
            h = t.copy()
            h.add_edge(u, v)
            key = nx.weisfeiler_lehman_graph_hash(h)
            if not any(k == key and nx.is_isomorphic(h, o) for k, o in found):
                found.append((key, h))
    return [h for _, h in found]


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    atlas = nx.graph_atlas_g()
    for n in range(8):
        write(f"all_n{n}.g6", [g for g in atlas if g.number_of_nodes() == n])
    for n in range(1, 9):
        write(f"trees_n{n}.g6", trees(n))
    for n in range(3, 9):
        write(f"unicyclic_n{n}.g6", unicyclic(n))


if __name__ == "__main__":
    main()
