#!/usr/bin/env python3
"""Generate the bundled chip topology documents (and their embedded C++ copy).

A chip is described by horizontal qubit rows and, between consecutive rows,
short "connector" columns. Each band of two neighbouring rows plus two
neighbouring connectors yields one 12-qubit rectangle. Qubits are numbered in
raster order: row 0 left-to-right, then the connectors below it, then row 1,
and so on. Rectangle indices are 1-based, row-major (band by band, left to
right).

Run from the repository root:  python3 tools/gen_topologies.py
"""

import json
import os
import sys
from collections import deque

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


class Lattice:
    def __init__(self, name, row_cols, band_conn_cols):
        """row_cols: per row, (first_col, last_col) inclusive.
        band_conn_cols: per band (between row i and i+1), connector columns."""
        self.name = name
        self.row_q = []          # per row: {col: qubit id}
        self.conn_q = []         # per band: {col: qubit id}
        self.edges = set()
        nxt = 0
        for i, (c0, c1) in enumerate(row_cols):
            row = {}
            for c in range(c0, c1 + 1):
                row[c] = nxt
                nxt += 1
            self.row_q.append(row)
            for c in range(c0, c1):
                self._edge(row[c], row[c + 1])
            if i < len(band_conn_cols):
                conns = {}
                for c in band_conn_cols[i]:
                    conns[c] = nxt
                    nxt += 1
                self.conn_q.append(conns)
        self.qubit_count = nxt
        for b, conns in enumerate(self.conn_q):
            for c, q in conns.items():
                self._edge(self.row_q[b][c], q)
                self._edge(q, self.row_q[b + 1][c])
        self.rectangles = []
        index = 1
        for b, conns in enumerate(self.conn_q):
            cols = sorted(conns)
            for k in range(len(cols) - 1):
                cl, cr = cols[k], cols[k + 1]
                assert cr - cl == 4, (self.name, b, cl, cr)
                top = self.row_q[b]
                bot = self.row_q[b + 1]
                cycle = [top[c] for c in range(cl, cr + 1)]
                cycle.append(conns[cr])
                cycle += [bot[c] for c in range(cr, cl - 1, -1)]
                cycle.append(conns[cl])
                corners = [cycle[0], cycle[4], cycle[6], cycle[10]]
                self.rectangles.append({"index": index, "cycle": cycle,
                                        "corners": corners})
                index += 1

    def _edge(self, a, b):
        self.edges.add((min(a, b), max(a, b)))

    def adjacency(self):
        pairs = []
        rects = self.rectangles
        for i in range(len(rects)):
            qi = set(rects[i]["cycle"])
            for j in range(i + 1, len(rects)):
                if qi & set(rects[j]["cycle"]):
                    pairs.append([rects[i]["index"], rects[j]["index"]])
        return pairs

    def to_doc(self):
        return {
            "schema_version": 1,
            "name": self.name,
            "qubit_count": self.qubit_count,
            "edges": sorted(list(e) for e in self.edges),
            "rectangles": self.rectangles,
            "adjacency": self.adjacency(),
        }


def neighbours(edges):
    adj = {}
    for a, b in edges:
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    return adj


def check(lat, expect_qubits, expect_rects):
    doc = lat.to_doc()
    assert doc["qubit_count"] == expect_qubits, (lat.name, doc["qubit_count"])
    assert len(doc["rectangles"]) == expect_rects, len(doc["rectangles"])
    adj = neighbours(doc["edges"])
    # connectivity
    seen = {0}
    q = deque([0])
    while q:
        for n in adj[q.popleft()]:
            if n not in seen:
                seen.add(n)
                q.append(n)
    assert len(seen) == expect_qubits, "graph disconnected"
    for r in doc["rectangles"]:
        cyc = r["cycle"]
        assert len(cyc) == 12 and len(set(cyc)) == 12
        for k in range(12):
            assert cyc[(k + 1) % 12] in adj[cyc[k]], ("cycle broken", r)
        pos = {q: k for k, q in enumerate(cyc)}
        cs = r["corners"]
        assert (pos[cs[0]] + 6) % 12 == pos[cs[2]]
        assert (pos[cs[1]] + 6) % 12 == pos[cs[3]]
    for i, j in doc["adjacency"]:
        qi = set(lat.rectangles[i - 1]["cycle"])
        qj = set(lat.rectangles[j - 1]["cycle"])
        assert len(qi | qj) == 21, (i, j, len(qi | qj))
    return doc


def shortest_paths(doc, members, a, b):
    """All shortest paths a->b inside the sub-graph induced by `members`."""
    adj = neighbours([e for e in doc["edges"]
                      if e[0] in members and e[1] in members])
    dist = {a: 0}
    q = deque([a])
    while q:
        u = q.popleft()
        for v in adj.get(u, ()):
            if v not in dist:
                dist[v] = dist[u] + 1
                q.append(v)
    out = []

    def back(v, tail):
        if v == a:
            out.append(tail)
            return
        for u in adj[v]:
            if dist.get(u, -2) == dist[v] - 1:
                back(u, [u] + tail)

    if b in dist:
        back(b, [b])
    return out


def pair_members(doc, i, j):
    return set(doc["rectangles"][i - 1]["cycle"]) | set(doc["rectangles"][j - 1]["cycle"])


def spot_checks(eagle, heron):
    # Heron pair {1,5}: far corners 3 and 49, three shortest routes.
    mem = pair_members(heron, 1, 5)
    assert len(mem) == 21
    paths = shortest_paths(heron, mem, 3, 49)
    assert len(paths) == 3, paths
    assert len(shortest_paths(heron, mem, 4, 48)) == 2
    assert len(shortest_paths(heron, mem, 5, 47)) == 3
    assert heron["rectangles"][0]["corners"] == [3, 7, 27, 23]
    # Eagle pair {1,5} is the same diagonal shape; far corners are 1 and 45.
    mem = pair_members(eagle, 1, 5)
    assert len(mem) == 21
    assert len(shortest_paths(eagle, mem, 1, 45)) == 3
    # Eagle pair {1,2} shares a full vertical side.
    shared = set(eagle["rectangles"][0]["cycle"]) & set(eagle["rectangles"][1]["cycle"])
    assert len(shared) == 3, shared


def dump(doc, path):
    rect_lines = ",\n    ".join(json.dumps(r, separators=(", ", ": "))
                                for r in doc["rectangles"])
    txt = (
        "{\n"
        f'  "schema_version": {doc["schema_version"]},\n'
        f'  "name": {json.dumps(doc["name"])},\n'
        f'  "qubit_count": {doc["qubit_count"]},\n'
        f'  "edges": {json.dumps(doc["edges"], separators=(",", ":"))},\n'
        f'  "rectangles": [\n    {rect_lines}\n  ],\n'
        f'  "adjacency": {json.dumps(doc["adjacency"], separators=(",", ":"))}\n'
        "}\n"
    )
    with open(path, "w") as f:
        f.write(txt)
    return txt


def main():
    eagle = Lattice(
        "eagle",
        row_cols=[(1, 14)] + [(0, 14)] * 5 + [(0, 13)],
        band_conn_cols=[[2, 6, 10, 14], [0, 4, 8, 12]] * 3,
    )
    heron = Lattice(
        "heron",
        row_cols=[(0, 15)] * 8,
        band_conn_cols=[[3, 7, 11, 15], [1, 5, 9, 13]] * 3 + [[3, 7, 11, 15]],
    )
    mini = Lattice(
        "mini",
        row_cols=[(0, 8), (0, 8), (2, 6)],
        band_conn_cols=[[0, 4, 8], [2, 6]],
    )
    eagle_doc = check(eagle, 127, 18)
    heron_doc = check(heron, 156, 21)
    mini_doc = check(mini, 28, 3)
    spot_checks(eagle_doc, heron_doc)

    data_dir = os.path.join(ROOT, "data", "topologies")
    os.makedirs(data_dir, exist_ok=True)
    eagle_txt = dump(eagle_doc, os.path.join(data_dir, "eagle.json"))
    heron_txt = dump(heron_doc, os.path.join(data_dir, "heron.json"))
    dump(mini_doc, os.path.join(data_dir, "mini.json"))

    cpp = (
        "// Generated by tools/gen_topologies.py -- do not edit by hand.\n"
        "#include \"qpb/bundled.hpp\"\n\n"
        "namespace qpb {\n\n"
        "const char* const kEagleTopologyJson = R\"qpbjson(%s)qpbjson\";\n\n"
        "const char* const kHeronTopologyJson = R\"qpbjson(%s)qpbjson\";\n\n"
        "}  // namespace qpb\n" % (eagle_txt, heron_txt)
    )
    with open(os.path.join(ROOT, "src", "bundled_topologies.cpp"), "w") as f:
        f.write(cpp)
    print("eagle:", eagle_doc["qubit_count"], "qubits,",
          len(eagle_doc["rectangles"]), "rectangles,",
          len(eagle_doc["adjacency"]), "adjacent pairs")
    print("heron:", heron_doc["qubit_count"], "qubits,",
          len(heron_doc["rectangles"]), "rectangles,",
          len(heron_doc["adjacency"]), "adjacent pairs")
    print("mini :", mini_doc["qubit_count"], "qubits,",
          len(mini_doc["rectangles"]), "rectangles")


if __name__ == "__main__":
    sys.exit(main())
