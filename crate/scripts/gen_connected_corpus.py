#!/usr/bin/env python3
"""Regenerate crates/xchain/data/connected_n1_7.g6.

Writes every connected simple graph on 1..7 vertices, one per isomorphism
class, in graph6 format. Source: the networkx graph atlas, which lists all
graphs up to 7 vertices.
"""
import sys

import networkx as nx


def main(path):
    lines = []
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if n == 0 or not nx.is_connected(g):
            continue
        lines.append(nx.to_graph6_bytes(g, header=False).decode().strip())
    with open(path, "w") as f:
        f.write("\n".join(lines) + "\n")
    print(f"wrote {len(lines)} graphs to {path}")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "crates/xchain/data/connected_n1_7.g6")
