"""Relative entropy between degree signatures and the similarity built on it.

Signatures of different nodes usually have different supports, so the
plain Kullback-Leibler divergence would be infinite for most pairs. Every
divergence here is summed only over components where *both* signatures
are positive. Because signatures are sorted descending, that is simply
the first ``min(support_p, support_q)`` components.

Similarity is ``1 - (D(p||q) + D(q||p))``. The two directions are
evaluated together as ``sum((p_k - q_k) * ln(p_k / q_k))``: every term is
non-negative, so similarity never exceeds 1 and equals 1 exactly for
identical distributions.
"""

import csv
import io
import json
import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import NodeNotFoundError
from .signature import all_signatures

__all__ = [
    "SimilarityMatrix",
    "NodeRanking",
    "kl_divergence",
    "symmetric_divergence",
    "similarity",
    "similarity_matrix",
    "matrix_from_signatures",
    "similarity_sums",
    "top_k_similar",
]


def kl_divergence(p, q):
    """Relative entropy ``D(p || q)`` over the common support, natural log.

    Unlike the full divergence this can be negative.
    """
    tp, tq = p.total, q.total
    acc = 0.0
    for a, b in zip(p.degrees, q.degrees):
        pa = a / tp
        acc += pa * math.log(pa / (b / tq))
    return acc


def symmetric_divergence(p, q):
    """``D(p||q) + D(q||p)`` over the common support."""
    lp, lq = p.log_probabilities(), q.log_probabilities()
    tp, tq = p.total, q.total
    acc = 0.0
    for k in range(min(p.support, q.support)):
        acc = acc + (p.degrees[k] / tp - q.degrees[k] / tq) * (lp[k] - lq[k])
    return acc


def similarity(p, q):
    """Similarity of two signatures; 1 means the same distribution."""
    return 1.0 - symmetric_divergence(p, q)


@dataclass(frozen=True)
class SimilarityMatrix:
    """Symmetric matrix of pairwise similarities with node labels."""

    labels: tuple
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        self.values.setflags(write=False)

    def __len__(self):
        return len(self.labels)

    def index_of(self, label):
        try:
            return self.labels.index(str(label))
        except ValueError:
            raise NodeNotFoundError(f"no node labelled {label!r}") from None

    def __getitem__(self, pair):
        a, b = pair
        return float(self.values[self.index_of(a), self.index_of(b)])

    def to_csv(self, precision=2):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["", *self.labels])
        for lab, row in zip(self.labels, self.values):
            w.writerow([lab, *(f"{v:.{precision}f}" for v in row)])
        return buf.getvalue()

    def to_json(self):
        # repr-precision floats round-trip exactly
        return json.dumps({"labels": list(self.labels), "matrix": self.values.tolist()})

    @classmethod
    def from_json(cls, text):
        data = json.loads(text)
        return cls(tuple(data["labels"]), np.array(data["matrix"], dtype=np.float64))


def matrix_from_signatures(signatures, labels, threads=0, backend=None):
    """Similarity matrix for an explicit list of signatures.

    Parameters
    ----------
    signatures : sequence of DegreeSignature
    labels : sequence of str
        One label per signature, in the same order.
    threads : int
        Worker cap for the kernel; 0 picks automatically.
    backend : {"cython", "python"}, optional
        Kernel implementation; defaults to the compiled one when present.
    """
    if len(signatures) != len(labels):
        raise ValueError("need exactly one label per signature")
    div = kernels.symmetric_divergences(signatures, threads=threads, backend=backend)
    return SimilarityMatrix(tuple(str(x) for x in labels), 1.0 - div)


def similarity_matrix(g, threads=0, backend=None):
    """Similarity matrix of every node pair of graph ``g``."""
    return matrix_from_signatures(all_signatures(g), g.labels, threads=threads, backend=backend)


@dataclass(frozen=True)
class NodeRanking:
    """Nodes ordered by their total similarity to all other nodes."""

    entries: tuple

    @property
    def top(self):
        return self.entries[0][0]

    @property
    def bottom(self):
        return self.entries[-1][0]

    def labels(self):
        return [lab for lab, _ in self.entries]

    def to_csv(self, precision=None):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["rank", "label", "score"])
        for r, (lab, score) in enumerate(self.entries, start=1):
            w.writerow([r, lab, repr(score) if precision is None else f"{score:.{precision}f}"])
        return buf.getvalue()


def _ordered(labels, scores, candidates):
    order = sorted(candidates, key=lambda j: (-scores[j], j))
    return tuple((labels[j], scores[j]) for j in order)


def similarity_sums(m, include_diagonal=False):
    """Rank nodes by total similarity to the others.

    Row sums use :func:`math.fsum`, so nodes whose rows hold the same
    values tie exactly regardless of column order. Ties go to the lower
    node index.
    """
    vals = m.values
    n = len(m.labels)
    scores = []
    for i in range(n):
        row = vals[i].tolist()
        if not include_diagonal:
            del row[i]
        scores.append(math.fsum(row))
    return NodeRanking(_ordered(m.labels, scores, range(n)))


def top_k_similar(m, node, k):
    """The ``k`` nodes most similar to ``node`` (a label), best first."""
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    i = m.index_of(node)
    row = m.values[i].tolist()
    others = [j for j in range(len(row)) if j != i]
    return list(_ordered(m.labels, row, others)[:k])
