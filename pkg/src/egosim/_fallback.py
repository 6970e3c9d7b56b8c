"""Pure numpy implementation of the pairwise divergence kernel.

Components are accumulated one column at a time so each pair sees the
same sequence of floating point operations as the compiled kernel.
"""

from concurrent.futures import ThreadPoolExecutor
import os

import numpy as np


def _row(probs, logs, support, i, out):
    n = probs.shape[0]
    if i + 1 >= n:
        return
    rest_p = probs[i + 1:]
    rest_l = logs[i + 1:]
    m = np.minimum(support[i], support[i + 1:])
    acc = np.zeros(n - i - 1)
    for k in range(int(support[i])):
        term = (probs[i, k] - rest_p[:, k]) * (logs[i, k] - rest_l[:, k])
        acc += np.where(k < m, term, 0.0)
    out[i, i + 1:] = acc
    out[i + 1:, i] = acc


def symmetric_divergences(probs, logs, support, threads=0):
    """Symmetric truncated divergence for every unordered pair of rows."""
    probs = np.ascontiguousarray(probs, dtype=np.float64)
    logs = np.ascontiguousarray(logs, dtype=np.float64)
    support = np.asarray(support, dtype=np.int64)
    n = probs.shape[0]
    out = np.zeros((n, n), dtype=np.float64)
    if threads <= 0:
        threads = os.cpu_count() or 1
    if threads == 1 or n < 64:
        for i in range(n):
            _row(probs, logs, support, i, out)
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(lambda i: _row(probs, logs, support, i, out), range(n)))
    return out
