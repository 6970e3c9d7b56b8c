"""Backend selection for the pairwise divergence kernel.

The compiled extension is used when it imported successfully, unless the
``EGOSIM_PURE_PYTHON`` environment variable is set to a non-empty value
other than ``0``.
"""

import os

import numpy as np

from . import _fallback

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

BACKENDS = {"python": _fallback.symmetric_divergences}
if _compiled is not None:
    BACKENDS["cython"] = _compiled.symmetric_divergences

if _compiled is not None and os.environ.get("EGOSIM_PURE_PYTHON", "0") in ("", "0"):
    DEFAULT_BACKEND = "cython"
else:
    DEFAULT_BACKEND = "python"


def available_backends():
    return sorted(BACKENDS)


def pack(signatures):
    """Stack signatures into dense probability, log and support arrays.

    Columns beyond a row's support hold zeros in both arrays.
    """
    n = len(signatures)
    width = max((s.support for s in signatures), default=0)
    probs = np.zeros((n, width), dtype=np.float64)
    logs = np.zeros((n, width), dtype=np.float64)
    support = np.empty(n, dtype=np.int64)
    for r, s in enumerate(signatures):
        k = s.support
        probs[r, :k] = s.probabilities()[:k]
        logs[r, :k] = s.log_probabilities()
        support[r] = k
    return probs, logs, support


def symmetric_divergences(signatures, threads=0, backend=None):
    """Pairwise symmetric divergence matrix for ``signatures``."""
    name = backend or DEFAULT_BACKEND
    try:
        fn = BACKENDS[name]
    except KeyError:
        raise ValueError(f"backend {name!r} is not available; have {available_backends()}") from None
    probs, logs, support = pack(signatures)
    return np.asarray(fn(probs, logs, support, int(threads)))
