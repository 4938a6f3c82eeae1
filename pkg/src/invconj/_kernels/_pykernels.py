"""Pure-Python (numpy) versions of the compiled kernels.

Signatures and results match ``_ckernels`` exactly.
"""

from __future__ import annotations

import numpy as np


def assoc_violations(T: np.ndarray, limit: int = 100) -> list[tuple[int, int, int]]:
    n = T.shape[0]
    out: list[tuple[int, int, int]] = []
    for i in range(n):
        left = T[T[i]]  # left[j, k] = (i j) k
        right = T[i][T]  # right[j, k] = i (j k)
        for j, k in zip(*np.nonzero(left != right)):
            out.append((i, int(j), int(k)))
            if len(out) >= limit:
                return out
    return out


def conjugators(T: np.ndarray, inv: np.ndarray, a: int, b: int) -> list[int]:
    g = np.arange(T.shape[0])
    ok = (T[T[inv, a], g] == b) & (T[T[g, b], inv] == a)
    return [int(x) for x in np.nonzero(ok)[0]]


def conjugacy_matrix(T: np.ndarray, inv: np.ndarray, n: int) -> np.ndarray:
    res = np.zeros((n, n), dtype=bool)
    a = np.arange(n)
    for g in range(T.shape[0]):
        gi = inv[g]
        b = T[T[gi, :n], g]
        inside = b < n
        back = T[T[g, b[inside]], gi]
        hit = back == a[inside]
        res[a[inside][hit], b[inside][hit]] = True
    return res


def n_conjugacy_matrix(T: np.ndarray, n: int) -> np.ndarray:
    # comm[a, b, g] <=> a g = g b
    comm = T[:n, :][:, None, :] == T[:, :n].T[None, :, :]
    res = np.zeros((n, n), dtype=bool)
    for a in range(n):
        for b in range(n):
            G = np.nonzero(comm[a, b])[0]
            H = np.nonzero(comm[b, a])[0]
            if not len(G) or not len(H):
                continue
            hag = T[np.ix_(T[H, a], G)] == b  # [h, g]
            gbh = T[np.ix_(T[G, b], H)] == a  # [g, h]
            res[a, b] = bool((hag & gbh.T).any())
    return res


def chart_conjugators(alpha: np.ndarray, beta: np.ndarray,
                      taus: np.ndarray, tau_invs: np.ndarray) -> np.ndarray:
    n = alpha.shape[0] - 1
    rows = np.arange(taus.shape[0])[:, None]
    ok = (taus[rows, alpha[tau_invs[:, :n]]] == beta[:n]).all(axis=1)
    ok &= (tau_invs[rows, beta[taus[:, :n]]] == alpha[:n]).all(axis=1)
    return np.nonzero(ok)[0].astype(np.intp)
