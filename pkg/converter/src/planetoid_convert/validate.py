"""Re-derive every meta.json count from the binaries and compare.

The checks are deliberately independent of the conversion code: sizes
come from the files on disk, node count from the label file, and the
edge file is re-examined for ordering, duplicates, self-loops and range.
Returns a list of problem strings; empty means the directory is
internally consistent.
"""

import json
from pathlib import Path

import numpy as np

META_KEYS = {"name", "num_nodes", "num_features", "num_classes",
             "num_undirected_edges"}
FILES = ("meta.json", "edges.u32le", "features.f32le", "labels.u32le",
         "split.json")


def validate(out_dir) -> list[str]:
    out = Path(out_dir)
    problems = []
    missing = [f for f in FILES if not (out / f).is_file()]
    if missing:
        return [f"missing file(s): {', '.join(missing)}"]

    try:
        meta = json.loads((out / "meta.json").read_text())
    except json.JSONDecodeError as e:
        return [f"meta.json: {e}"]
    if set(meta) != META_KEYS:
        return [f"meta.json keys {sorted(meta)} != {sorted(META_KEYS)}"]
    n, d = meta["num_nodes"], meta["num_features"]
    classes, m = meta["num_classes"], meta["num_undirected_edges"]

    labels_raw = (out / "labels.u32le").read_bytes()
    if len(labels_raw) != 4 * n:
        problems.append(f"labels.u32le is {len(labels_raw)} bytes, "
                        f"expected {4 * n} for {n} nodes")
        labels = None
    else:
        labels = np.frombuffer(labels_raw, dtype="<u4")
        if labels.size and int(labels.max()) >= classes:
            problems.append(f"label {int(labels.max())} out of range "
                            f"0..{classes - 1}")

    feat_size = (out / "features.f32le").stat().st_size
    if feat_size != 4 * n * d:
        problems.append(f"features.f32le is {feat_size} bytes, expected "
                        f"{4 * n * d} for {n} x {d} float32")

    edges_raw = (out / "edges.u32le").read_bytes()
    if len(edges_raw) != 8 * m:
        problems.append(f"edges.u32le is {len(edges_raw)} bytes, expected "
                        f"{8 * m} for {m} undirected edges")
    elif m:
        edges = np.frombuffer(edges_raw, dtype="<u4").reshape(-1, 2)
        a, b = edges[:, 0].astype(np.int64), edges[:, 1].astype(np.int64)
        if edges.max() >= n:
            problems.append(f"edge endpoint {int(edges.max())} >= {n}")
        if np.any(a >= b):
            i = int(np.flatnonzero(a >= b)[0])
            kind = "self-loop" if a[i] == b[i] else "not (min, max) ordered"
            problems.append(f"edge row {i} ({a[i]}, {b[i]}): {kind}")
        keys = a * n + b
        if np.any(np.diff(keys) <= 0):
            i = int(np.flatnonzero(np.diff(keys) <= 0)[0])
            what = "duplicate edge" if keys[i] == keys[i + 1] else "unsorted edges"
            problems.append(f"edge rows {i}/{i + 1}: {what}")

    try:
        split = json.loads((out / "split.json").read_text())
    except json.JSONDecodeError as e:
        problems.append(f"split.json: {e}")
        return problems
    if set(split) != {"train", "val", "test"}:
        problems.append(f"split.json keys {sorted(split)}")
        return problems
    seen = np.zeros(n, dtype=bool)
    for part in ("train", "val", "test"):
        ids = np.asarray(split[part], dtype=np.int64)
        if ids.size == 0:
            problems.append(f"split {part} is empty")
            continue
        if ids.min() < 0 or ids.max() >= n:
            problems.append(f"split {part} id out of range 0..{n - 1}")
            continue
        if np.unique(ids).size != ids.size:
            problems.append(f"split {part} repeats node ids")
        if np.any(seen[ids]):
            problems.append(f"split {part} overlaps an earlier split")
        seen[ids] = True

    return problems
