#!/usr/bin/env python3
# Copyright 2026 The orbitkit Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates data/corpus/connected_<n>.g6 for n = 1..8.

Every graph on n vertices arises from a graph on n-1 vertices by adding one
vertex with some neighbourhood, so the enumeration extends all isomorphism
classes of order n-1 by every neighbour subset and keeps one graph per class.
Classes are bucketed by a Weisfeiler-Lehman hash and separated with an exact
isomorphism test. The counts are checked against the known totals.
"""

import argparse
import itertools
import pathlib
import sys

import networkx as nx

# Unlabelled graphs / connected unlabelled graphs on n vertices.
ALL_COUNTS = [1, 1, 2, 4, 11, 34, 156, 1044, 12346]
CONNECTED_COUNTS = [1, 1, 1, 2, 6, 21, 112, 853, 11117]


def extend(graphs, n):
    buckets = {}
    reps = []
    for g in graphs:
        for k in range(n):
            for nbrs in itertools.combinations(range(n - 1), k):
                h = g.copy()
                h.add_node(n - 1)
                h.add_edges_from((n - 1, u) for u in nbrs)
                key = (tuple(sorted(d for _, d in h.degree())),
                       nx.weisfeiler_lehman_graph_hash(h, iterations=3))
                bucket = buckets.setdefault(key, [])
                if any(nx.is_isomorphic(h, other) for other in bucket):
                    continue
                bucket.append(h)
                reps.append(h)
    return reps


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--out", default=str(
        pathlib.Path(__file__).resolve().parent.parent / "data" / "corpus"))
    parser.add_argument("--max-n", type=int, default=8)
    args = parser.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    graphs = [nx.empty_graph(1)]
    for n in range(1, args.max_n + 1):
        if n > 1:
            graphs = extend(graphs, n)
        if len(graphs) != ALL_COUNTS[n]:
            sys.exit(f"n={n}: got {len(graphs)} graphs, "
                     f"expected {ALL_COUNTS[n]}")
        connected = [g for g in graphs if nx.is_connected(g)]
        if len(connected) != CONNECTED_COUNTS[n]:
            sys.exit(f"n={n}: got {len(connected)} connected graphs, "
                     f"expected {CONNECTED_COUNTS[n]}")
        lines = sorted(nx.to_graph6_bytes(g, header=False).decode().strip()
                       for g in connected)
        (out / f"connected_{n}.g6").write_text("\n".join(lines) + "\n")
        print(f"n={n}: {len(graphs)} graphs, {len(connected)} connected")


if __name__ == "__main__":
    main()
