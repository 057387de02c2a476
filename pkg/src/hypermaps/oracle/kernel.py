"""Compiled enumeration of permutations whose cycles all have length l."""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def enumerate_uniform_class(d, l, sigma2, block, nblocks, prefix, hist):
    """Walk every sigma1 of cycle type (l, ..., l) extending ``prefix``.

    sigma1 is written as a word: positions c*l .. c*l+l-1 hold the c-th
    cycle, which starts at the smallest point not used by earlier cycles.
    For each sigma1 such that <sigma1, sigma2> is transitive, hist[v] is
    incremented where v is the number of cycles of sigma1 * sigma2.
    ``block`` maps each point to the index of its sigma2 cycle.
    Returns the number of sigma1 visited (transitive or not).
    """
    word = np.empty(d, np.int64)
    used = np.zeros(d, np.bool_)
    choice = np.full(d, -1, np.int64)
    s1 = np.empty(d, np.int64)
    seen = np.empty(d, np.bool_)
    parent = np.empty(nblocks, np.int64)
    fixed = prefix.shape[0]
    for i in range(fixed):
        word[i] = prefix[i]
        used[prefix[i]] = True
        choice[i] = prefix[i]
    visited = 0
    pos = fixed
    if pos == d:
        pos = d - 1
        leaf_only = True
    else:
        leaf_only = False
    while pos >= fixed or leaf_only:
        if not leaf_only:
            if choice[pos] >= 0:
                used[choice[pos]] = False
            if pos % l == 0:
                if choice[pos] >= 0:
                    choice[pos] = -1
                    pos -= 1
                    continue
                x = 0
                while used[x]:
                    x += 1
            else:
                x = choice[pos] + 1
                while x < d and used[x]:
                    x += 1
                if x >= d:
                    choice[pos] = -1
                    pos -= 1
                    continue
            choice[pos] = x
            used[x] = True
            word[pos] = x
            if pos < d - 1:
                pos += 1
                choice[pos] = -1
                continue
        # a complete sigma1
        visited += 1
        for c in range(0, d, l):
            for r in range(l - 1):
                s1[word[c + r]] = word[c + r + 1]
            s1[word[c + l - 1]] = word[c]
        for b in range(nblocks):
            parent[b] = b
        components = nblocks
        for i in range(d):
            a = block[i]
            while parent[a] != a:
                a = parent[a]
            b = block[s1[i]]
            while parent[b] != b:
                b = parent[b]
            if a != b:
                parent[a] = b
                components -= 1
        if components == 1:
            for i in range(d):
                seen[i] = False
            cycles = 0
            for i in range(d):
                if not seen[i]:
                    cycles += 1
                    j = i
                    while not seen[j]:
                        seen[j] = True
                        j = s1[sigma2[j]]
            hist[cycles] += 1
        if leaf_only:
            break
    return visited
