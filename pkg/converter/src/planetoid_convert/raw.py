"""Reading the raw Planetoid distribution.

A bundle is seven pickles plus a text index, all named ind.<name>.<part>:

    x, y        labeled-train features (scipy sparse) and one-hot labels
    tx, ty      test features and one-hot labels
    allx, ally  all non-test rows (x is a prefix of allx)
    graph       adjacency dict {node: [neighbor, ...]}, directed entries
    test.index  the test rows' node ids, one per line, permuted

Node ids 0..len(allx)-1 are the non-test rows in order; test rows follow
at the positions listed in test.index. CiteSeer's test range skips some
ids entirely (isolated papers); those nodes exist in the graph but have
no feature/label row, which `load_raw` repairs by inserting zero rows at
the missing positions.
"""

import pickle
import warnings
from dataclasses import dataclass
from pathlib import Path

import numpy as np
import scipy.sparse as sp

PARTS = ("x", "y", "tx", "ty", "allx", "ally", "graph", "test.index")


class RawFormatError(ValueError):
    """A raw bundle is missing files or internally inconsistent."""


@dataclass
class RawBundle:
    name: str
    features: np.ndarray        # (n, d) float64, rows in node-id order
    onehot: np.ndarray          # (n, C)
    graph: dict                 # node -> neighbor list, as distributed
    test_index: np.ndarray      # sorted test node ids
    num_train: int              # len(y): the labeled training rows


def _unpickle(path: Path):
    with open(path, "rb") as f:
        with warnings.catch_warnings():
            # the distributed pickles reference pre-1.8 scipy module paths
            warnings.simplefilter("ignore", DeprecationWarning)
            return pickle.load(f, encoding="latin1")


def load_raw(raw_dir, name: str) -> RawBundle:
    raw_dir = Path(raw_dir)
    paths = {part: raw_dir / f"ind.{name}.{part}" for part in PARTS}
    missing = [p.name for p in paths.values() if not p.is_file()]
    if missing:
        raise RawFormatError(f"missing raw file(s): {', '.join(missing)}")

    x, y, tx, ty, allx, ally = (_unpickle(paths[part])
                                for part in PARTS[:6])
    graph = _unpickle(paths["graph"])
    test_reorder = np.loadtxt(paths["test.index"], dtype=np.int64, ndmin=1)

    if allx.shape[1] != tx.shape[1]:
        raise RawFormatError(
            f"feature width mismatch: allx {allx.shape[1]} vs tx {tx.shape[1]}")
    if ally.shape[1] != ty.shape[1]:
        raise RawFormatError(
            f"class count mismatch: ally {ally.shape[1]} vs ty {ty.shape[1]}")
    if tx.shape[0] != test_reorder.size:
        raise RawFormatError(
            f"tx has {tx.shape[0]} rows but test.index lists {test_reorder.size}")

    test_sorted = np.sort(test_reorder)
    lo = int(test_sorted[0])
    span = int(test_sorted[-1]) - lo + 1

    # isolated test nodes: ids inside the test range absent from
    # test.index get zero feature/label rows at their positions
    if span != test_reorder.size:
        tx_ext = sp.lil_matrix((span, tx.shape[1]), dtype=np.float32)
        tx_ext[test_sorted - lo, :] = tx
        tx = tx_ext.tocsr()
        ty_ext = np.zeros((span, ty.shape[1]), dtype=ty.dtype)
        ty_ext[test_sorted - lo, :] = ty
        ty = ty_ext

    features = sp.vstack((allx, tx)).tolil()
    features[test_reorder, :] = features[test_sorted, :]
    features = np.asarray(features.todense(), dtype=np.float64)
    onehot = np.vstack((ally, ty))
    onehot[test_reorder, :] = onehot[test_sorted, :]

    n = features.shape[0]
    if max(graph) >= n or len(graph) > n:
        raise RawFormatError(
            f"graph refers to node {max(graph)} but only {n} rows exist")

    return RawBundle(name=name, features=features, onehot=onehot,
                     graph=graph, test_index=test_sorted,
                     num_train=y.shape[0])
