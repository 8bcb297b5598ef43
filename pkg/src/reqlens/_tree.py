"""Numba kernels for growing and evaluating decision trees.

Trees are stored as parallel node arrays; feature[i] < 0 marks a leaf.
Split search scans the sampled features in draw order and thresholds in
ascending order, keeping the first strict improvement, so growth is fully
deterministic for a given xorshift seed state.
"""

import numpy as np
from numba import njit

_GAIN_EPS = 1e-12


@njit(cache=True, inline="always")
def _xorshift64(state):
    x = state
    x ^= x << np.uint64(13)
    x ^= x >> np.uint64(7)
    x ^= x << np.uint64(17)
    return x


@njit(cache=True)
def grow_tree(X, y, idx, max_depth, min_samples_split, n_feat_sub, seed_state):
    """Grow one tree on X[idx] (bootstrap indices, duplicates allowed).

    Returns (feature, threshold, left, right, count_fr, count_nfr) arrays.
    max_depth < 0 means unlimited.
    """
    n = idx.shape[0]
    n_features = X.shape[1]
    cap = 2 * n + 2
    feature = np.full(cap, -1, np.int64)
    threshold = np.zeros(cap, np.float64)
    left = np.full(cap, -1, np.int64)
    right = np.full(cap, -1, np.int64)
    count_fr = np.zeros(cap, np.int64)
    count_nfr = np.zeros(cap, np.int64)

    # work stack rows: (node_id, start, end, depth) over a shared index array
    stack = np.zeros((cap, 4), np.int64)
    stack[0, 0] = 0
    stack[0, 1] = 0
    stack[0, 2] = n
    stack[0, 3] = 0
    top = 1
    n_nodes = 1
    state = seed_state
    feat_pool = np.empty(n_features, np.int64)
    part_buf = np.empty(n, np.int64)

    while top > 0:
        top -= 1
        node = stack[top, 0]
        s = stack[top, 1]
        e = stack[top, 2]
        depth = stack[top, 3]
        m = e - s
        c1 = 0
        for i in range(s, e):
            c1 += y[idx[i]]
        c0 = m - c1
        count_fr[node] = c0
        count_nfr[node] = c1
        if c0 == 0 or c1 == 0 or m < min_samples_split:
            continue
        if max_depth >= 0 and depth >= max_depth:
            continue
        p0 = c0 / m
        p1 = c1 / m
        parent_gini = 1.0 - p0 * p0 - p1 * p1

        for j in range(n_features):
            feat_pool[j] = j
        best_gain = _GAIN_EPS
        best_feature = -1
        best_threshold = 0.0
        n_sub = n_feat_sub if n_feat_sub < n_features else n_features
        for j in range(n_sub):
            state = _xorshift64(state)
            k = j + np.int64(state % np.uint64(n_features - j))
            tmp = feat_pool[j]
            feat_pool[j] = feat_pool[k]
            feat_pool[k] = tmp
            f = feat_pool[j]
            vals = np.empty(m, np.float64)
            for i in range(m):
                vals[i] = X[idx[s + i], f]
            order = np.argsort(vals, kind="mergesort")
            left1 = 0
            for i in range(m - 1):
                oi = order[i]
                left1 += y[idx[s + oi]]
                v_cur = vals[oi]
                v_next = vals[order[i + 1]]
                if v_next <= v_cur:
                    continue
                nl = i + 1
                nr = m - nl
                l1 = left1
                l0 = nl - l1
                r1 = c1 - l1
                r0 = nr - r1
                gl = 1.0 - (l0 / nl) ** 2 - (l1 / nl) ** 2
                gr = 1.0 - (r0 / nr) ** 2 - (r1 / nr) ** 2
                gain = parent_gini - (nl * gl + nr * gr) / m
                if gain > best_gain:
                    best_gain = gain
                    best_feature = f
                    best_threshold = 0.5 * (v_cur + v_next)
        if best_feature < 0:
            continue

        # stable partition of idx[s:e] into (<= threshold | > threshold)
        nl = 0
        for i in range(s, e):
            if X[idx[i], best_feature] <= best_threshold:
                part_buf[nl] = idx[i]
                nl += 1
        nr = nl
        for i in range(s, e):
            if X[idx[i], best_feature] > best_threshold:
                part_buf[nr] = idx[i]
                nr += 1
        for i in range(m):
            idx[s + i] = part_buf[i]

        left_id = n_nodes
        right_id = n_nodes + 1
        n_nodes += 2
        feature[node] = best_feature
        threshold[node] = best_threshold
        left[node] = left_id
        right[node] = right_id
        stack[top, 0] = left_id
        stack[top, 1] = s
        stack[top, 2] = s + nl
        stack[top, 3] = depth + 1
        top += 1
        stack[top, 0] = right_id
        stack[top, 1] = s + nl
        stack[top, 2] = e
        stack[top, 3] = depth + 1
        top += 1

    return (
        feature[:n_nodes],
        threshold[:n_nodes],
        left[:n_nodes],
        right[:n_nodes],
        count_fr[:n_nodes],
        count_nfr[:n_nodes],
    )


@njit(cache=True)
def tree_votes(feature, threshold, left, right, count_fr, count_nfr, X):
    """Per-row class vote of one tree: 1 = NFR (leaf ties vote NFR)."""
    n = X.shape[0]
    votes = np.zeros(n, np.int64)
    for row in range(n):
        node = 0
        while feature[node] >= 0:
            if X[row, feature[node]] <= threshold[node]:
                node = left[node]
            else:
                node = right[node]
        if count_nfr[node] >= count_fr[node]:
            votes[row] = 1
    return votes
