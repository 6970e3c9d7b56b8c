"""Bundled reference networks and descriptors for larger ones.

Only small corpora ship with the package. The larger networks are
described (counts and expected extreme nodes) but must be supplied as a
local file, either directly or through the ``EGOSIM_DATA_DIR`` directory.
"""

import json
import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

import numpy as np

from .errors import MissingDatasetError, NodeNotFoundError, UnknownDatasetError
from .graph import Graph, load_edge_list, read_graph
from .signature import DegreeSignature

__all__ = [
    "DatasetDescriptor",
    "SignatureSet",
    "list_datasets",
    "get_descriptor",
    "load_dataset",
    "synthetic_graph",
]

DATA_DIR_ENV = "EGOSIM_DATA_DIR"


@dataclass(frozen=True)
class DatasetDescriptor:
    name: str
    kind: str
    file: str
    format: str
    bundled: bool
    node_count: int
    edge_count: int | None
    expected_top: str | None
    expected_bottom: str | None
    indexing: int
    source_note: str


@dataclass(frozen=True)
class SignatureSet:
    """Labelled signatures without an underlying edge list."""

    labels: tuple
    signatures: tuple
    width: int

    def __len__(self):
        return len(self.labels)

    def index_of(self, label):
        try:
            return self.labels.index(str(label))
        except ValueError:
            raise NodeNotFoundError(f"no node labelled {label!r}") from None


def _data_file(name):
    return resources.files("egosim").joinpath("data", name)


def _manifest():
    return json.loads(_data_file("manifest.json").read_text(encoding="utf-8"))


def list_datasets():
    """Descriptors of every known dataset, bundled or not."""
    return [DatasetDescriptor(**d) for d in _manifest()["datasets"]]


def get_descriptor(name):
    for d in list_datasets():
        if d.name == name:
            return d
    known = ", ".join(d.name for d in list_datasets())
    raise UnknownDatasetError(f"unknown dataset {name!r} (known: {known})")


def _load_signatures(text):
    doc = json.loads(text)
    width = int(doc["width"])
    labels, sigs = [], []
    for i, node in enumerate(doc["nodes"]):
        labels.append(str(node["label"]))
        sigs.append(DegreeSignature.from_degrees(i, node["degrees"], width))
    return SignatureSet(tuple(labels), tuple(sigs), width)


def load_dataset(name, path=None):
    """Load a dataset by name.

    Parameters
    ----------
    name : str
        A name from :func:`list_datasets`.
    path : str or Path, optional
        Local copy of a dataset that is not bundled. When omitted the file
        is looked up in ``$EGOSIM_DATA_DIR``.

    Returns
    -------
    Graph or SignatureSet
    """
    desc = get_descriptor(name)
    if path is None and desc.bundled:
        text = _data_file(desc.file).read_text(encoding="utf-8")
        if desc.kind == "signatures":
            return _load_signatures(text)
        return load_edge_list(text)
    if path is None:
        root = os.environ.get(DATA_DIR_ENV)
        candidate = Path(root) / desc.file if root else None
        if candidate is None or not candidate.is_file():
            raise MissingDatasetError(
                f"dataset {name!r} is not bundled; pass a local file or place "
                f"{desc.file} in ${DATA_DIR_ENV}")
        path = candidate
    if not Path(path).is_file():
        raise MissingDatasetError(f"no such file: {path}")
    if desc.kind == "signatures":
        return _load_signatures(Path(path).read_text(encoding="utf-8"))
    return read_graph(path)


def synthetic_graph(node_count, edge_count, seed=0, exponent=2.5):
    """Random connected graph with a heavy-tailed degree sequence.

    A random recursive tree guarantees every node has degree at least 1;
    the remaining edges are drawn with endpoint probabilities proportional
    to power-law weights. Used as a stand-in when a real file is absent.
    """
    if edge_count < node_count - 1:
        raise ValueError("edge_count too small for a connected graph")
    if edge_count > node_count * (node_count - 1) // 2:
        raise ValueError("edge_count exceeds the number of node pairs")
    rng = np.random.default_rng(seed)
    edges = set()
    for v in range(1, node_count):
        u = int(rng.integers(v))
        edges.add((u, v))
    w = (np.arange(1, node_count + 1, dtype=np.float64)) ** (-1.0 / (exponent - 1.0))
    w = w[rng.permutation(node_count)]
    w /= w.sum()
    while len(edges) < edge_count:
        need = edge_count - len(edges)
        a = rng.choice(node_count, size=2 * need, p=w)
        b = rng.choice(node_count, size=2 * need, p=w)
        for u, v in zip(a.tolist(), b.tolist()):
            if u == v:
                continue
            edges.add((u, v) if u < v else (v, u))
            if len(edges) == edge_count:
                break
    labels = [str(i + 1) for i in range(node_count)]
    return Graph(labels, sorted(edges))
