"""Emit the portable dataset directory and an edge-count report.

Output files (consumed by the GNN package's strict loader):

    meta.json       name + counts, json.dumps(indent=2, sort_keys) + newline
    edges.u32le     unique undirected (min, max) pairs, lexicographically
                    sorted, little-endian uint32
    features.f32le  row-major float32, exactly as the source provides
                    (binary indicators for cora/citeseer, tf-idf for pubmed)
    labels.u32le    argmax of the one-hot rows; all-zero rows (isolated
                    citeseer test papers, never in any split) map to 0
    split.json      the standard public split: train = the first
                    len(y) nodes (20 per class), val = the next 500,
                    test = sorted test.index

meta.json records the *measured* unique-undirected edge count. Published
counts for the three citation sets are kept here only for the report,
which lists raw directed entries, self-loops, duplicates and any gap to
the published number rather than forcing agreement.
"""

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .raw import RawBundle, load_raw

# (nodes, features, classes, unique undirected edges) as published
PUBLISHED = {
    "cora": (2708, 1433, 7, 5278),
    "citeseer": (3327, 3703, 6, 4552),
    "pubmed": (19717, 500, 3, 44338),
}

VAL_SIZE = 500


class ConversionError(ValueError):
    pass


@dataclass
class EdgeCensus:
    directed_entries: int       # adjacency-list entries as distributed
    self_loops: int
    duplicate_entries: int      # directed entries beyond the first per pair
    unique_undirected: int


@dataclass
class Report:
    name: str
    num_nodes: int
    num_features: int
    num_classes: int
    census: EdgeCensus
    published: tuple | None     # None for names without a published row

    def lines(self):
        out = [f"{self.name}: {self.num_nodes} nodes, "
               f"{self.num_features} features, {self.num_classes} classes",
               f"  edges: {self.census.directed_entries} directed entries, "
               f"{self.census.self_loops} self-loops, "
               f"{self.census.duplicate_entries} duplicates -> "
               f"{self.census.unique_undirected} unique undirected"]
        if self.published is not None:
            pn, pd, pc, pe = self.published
            for label, got, want in (("nodes", self.num_nodes, pn),
                                     ("features", self.num_features, pd),
                                     ("classes", self.num_classes, pc),
                                     ("edges", self.census.unique_undirected, pe)):
                if got != want:
                    out.append(f"  NOTE: {label} {got} != published {want} "
                               f"(measured value kept)")
        return out


def edge_census(bundle: RawBundle) -> tuple[np.ndarray, EdgeCensus]:
    n = bundle.features.shape[0]
    pairs = set()
    directed = self_loops = 0
    for u, nbrs in bundle.graph.items():
        for v in nbrs:
            directed += 1
            if not 0 <= v < n:
                raise ConversionError(
                    f"graph lists neighbor {v} outside 0..{n - 1}")
            if u == v:
                self_loops += 1
                continue
            pairs.add((min(u, v), max(u, v)))
    edges = np.array(sorted(pairs), dtype=np.uint32).reshape(-1, 2)
    census = EdgeCensus(directed_entries=directed, self_loops=self_loops,
                        duplicate_entries=directed - self_loops - 2 * len(pairs),
                        unique_undirected=len(pairs))
    return edges, census


def convert(raw_dir, out_dir, name: str) -> Report:
    bundle = load_raw(raw_dir, name)
    edges, census = edge_census(bundle)

    n, d = bundle.features.shape
    num_classes = bundle.onehot.shape[1]
    labels = np.asarray(bundle.onehot).argmax(axis=1).astype("<u4")

    if bundle.num_train + VAL_SIZE > n:
        raise ConversionError(
            f"no room for a {VAL_SIZE}-node validation split after "
            f"{bundle.num_train} training nodes ({n} total)")

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    meta = {"name": name, "num_nodes": int(n), "num_features": int(d),
            "num_classes": int(num_classes),
            "num_undirected_edges": int(edges.shape[0])}
    (out / "meta.json").write_text(
        json.dumps(meta, indent=2, sort_keys=True) + "\n")
    (out / "edges.u32le").write_bytes(edges.astype("<u4").tobytes())
    (out / "features.f32le").write_bytes(
        bundle.features.astype("<f4").tobytes())
    (out / "labels.u32le").write_bytes(labels.tobytes())
    split = {"train": list(range(bundle.num_train)),
             "val": list(range(bundle.num_train, bundle.num_train + VAL_SIZE)),
             "test": [int(i) for i in bundle.test_index]}
    (out / "split.json").write_text(json.dumps(split, sort_keys=True) + "\n")

    return Report(name=name, num_nodes=n, num_features=d,
                  num_classes=num_classes, census=census,
                  published=PUBLISHED.get(name))
