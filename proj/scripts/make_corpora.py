#!/usr/bin/env python3
"""Regenerate the committed graph6 corpora.

graphs_n1-7.g6     every non-isomorphic graph on 1..7 vertices (networkx atlas)
connected_n1-7.g6  the connected subset of the above
connected_n8.g6    every non-isomorphic connected graph on 8 vertices

Order 8 is produced by extending each connected 7-vertex graph with one new
vertex in every possible way (a connected graph always has a non-cut vertex)
and removing isomorphic duplicates. With nauty installed the same files can
be produced with `geng -c 8`.
"""
import itertools
import pathlib
import sys

import networkx as nx

EXPECTED_CONNECTED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}
EXPECTED_ALL = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}


def g6(g):
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def main(out_dir):
    out = pathlib.Path(out_dir)
    atlas = [g for g in nx.graph_atlas_g() if g.number_of_nodes() >= 1]
    counts = {}
    for g in atlas:
        counts[g.number_of_nodes()] = counts.get(g.number_of_nodes(), 0) + 1
    assert counts == EXPECTED_ALL, counts
    (out / "graphs_n1-7.g6").write_text("".join(g6(g) + "\n" for g in atlas))
    connected = [g for g in atlas if nx.is_connected(g)]
    (out / "connected_n1-7.g6").write_text("".join(g6(g) + "\n" for g in connected))

    seven = [g for g in connected if g.number_of_nodes() == 7]
    buckets = {}
    for base in seven:
        for k in range(1, 8):
            for nbrs in itertools.combinations(range(7), k):
                h = base.copy()
                h.add_edges_from((7, v) for v in nbrs)
                key = (tuple(sorted(d for _, d in h.degree())),
                       nx.weisfeiler_lehman_graph_hash(h, iterations=3))
                bucket = buckets.setdefault(key, [])
                if not any(nx.is_isomorphic(h, o) for o in bucket):
                    bucket.append(h)
    eight = [g for b in buckets.values() for g in b]
    assert len(eight) == EXPECTED_CONNECTED[8], len(eight)
    lines = sorted(g6(g) for g in eight)
    (out / "connected_n8.g6").write_text("".join(l + "\n" for l in lines))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "corpora")
