"""Degree signatures of ego networks.

A node's signature lists the whole-graph degree of every member of its
ego network (the node and its neighbours), sorted from high to low and
normalised by their sum. It is padded with zeros to ``max_degree + 1``
components so every node of a graph has the same width.

Signatures keep integer degrees and an integer total; probabilities are
only turned into floats when divergences are evaluated or printed.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import UndefinedSignatureError

__all__ = [
    "DegreeSignature",
    "signature",
    "all_signatures",
    "render_signature",
]


@dataclass(frozen=True)
class DegreeSignature:
    """Exact degree signature of one node.

    Attributes
    ----------
    node : int
        Dense index of the node the signature belongs to.
    degrees : tuple of int
        Global degrees of the ego-network members, non-increasing.
    width : int
        Padded component count (``max_degree + 1`` of the source graph).
    total : int
        Sum of ``degrees``.
    """

    node: int
    degrees: tuple
    width: int
    total: int = field(init=False)

    def __post_init__(self):
        degrees = tuple(int(d) for d in self.degrees)
        if not degrees:
            raise ValueError("a signature needs at least one degree")
        if any(d < 1 for d in degrees):
            raise ValueError(f"degrees must be positive, got {degrees}")
        if any(a < b for a, b in zip(degrees, degrees[1:])):
            raise ValueError(f"degrees must be non-increasing, got {degrees}")
        if self.width < len(degrees):
            raise ValueError(f"width {self.width} is smaller than support {len(degrees)}")
        object.__setattr__(self, "degrees", degrees)
        object.__setattr__(self, "total", sum(degrees))

    @classmethod
    def from_degrees(cls, node, degrees, width=None):
        """Build a signature from degrees in any order."""
        degrees = sorted(degrees, reverse=True)
        return cls(node, tuple(degrees), len(degrees) if width is None else width)

    @property
    def support(self):
        """Number of strictly positive components."""
        return len(self.degrees)

    def fractions(self):
        """All ``width`` components as exact fractions."""
        t = self.total
        return [Fraction(d, t) for d in self.degrees] + [Fraction(0)] * (self.width - len(self.degrees))

    def probabilities(self):
        """All ``width`` components as floats."""
        t = self.total
        return [d / t for d in self.degrees] + [0.0] * (self.width - len(self.degrees))

    def log_probabilities(self):
        """Natural logs of the positive components only."""
        t = self.total
        return [math.log(d / t) for d in self.degrees]

    def same_distribution(self, other):
        """True when both signatures are the same probability vector.

        Trailing zero padding is ignored, so signatures of different widths
        can still compare equal.
        """
        if self.support != other.support:
            return False
        return all(a * other.total == b * self.total for a, b in zip(self.degrees, other.degrees))


def signature(g, i):
    """Degree signature of node ``i`` in graph ``g``.

    Raises
    ------
    UndefinedSignatureError
        If ``i`` has no neighbours.
    """
    members = g.local_network(i).members
    if len(members) == 1:
        raise UndefinedSignatureError(g.labels[i])
    return DegreeSignature.from_degrees(i, [g.degree(m) for m in members], g.max_degree() + 1)


def all_signatures(g):
    """Signatures of every node of ``g`` in index order."""
    width = g.max_degree() + 1
    degs = g.degrees()
    out = []
    for i, nbrs in enumerate(g.adjacency):
        if not nbrs:
            raise UndefinedSignatureError(g.labels[i])
        members = [degs[i]] + [degs[j] for j in nbrs]
        out.append(DegreeSignature.from_degrees(i, members, width))
    return out


def render_signature(sig, precision=2, sep=" "):
    """Format every padded component of ``sig`` with ``precision`` decimals."""
    return sep.join(f"{p:.{precision}f}" for p in sig.probabilities())
