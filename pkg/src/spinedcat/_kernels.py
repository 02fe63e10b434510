"""Hot integer kernels: exact tree-width and graph canonization.

Graphs enter as ``int64`` numpy arrays of per-vertex adjacency bitmasks.
Every kernel exists in two flavours built from the same source:
``*_py`` (plain python over numpy values) and the default export, which
is the numba-compiled version unless ``SPINEDCAT_JIT=0``.

The subset dynamic program and the ordering oracle deliberately share no
code: the DP measures elimination back-degrees through reachability over
the already-eliminated set, while the oracle simulates explicit fill-in
along every elimination ordering.
"""

from __future__ import annotations

import numpy as np

from ._accel import JIT_ENABLED, jit_compile

_M1 = 0x5555555555555555
_M2 = 0x3333333333333333
_M4 = 0x0F0F0F0F0F0F0F0F


def _treewidth_dp(adj, n):
    """Exact tree-width of a graph on 1..24 vertices.

    Returns ``(width, order)`` where ``order`` is the lexicographically
    smallest elimination ordering whose maximum back-degree equals the
    optimum.  dp[S] is the best achievable maximum back-degree when the
    vertex set S is eliminated first (in some order); the back-degree of
    v relative to an eliminated set S counts the vertices outside
    S + {v} reachable from v through S.
    """

    def popcount(x):
        x = x - ((x >> 1) & _M1)
        x = (x & _M2) + ((x >> 2) & _M2)
        x = (x + (x >> 4)) & _M4
        x = x + (x >> 8)
        x = x + (x >> 16)
        x = x + (x >> 32)
        return x & 0x7F

    def back_degree(adj, S, v):
        vbit = 1 << v
        nbrs = adj[v]
        seen = vbit | nbrs
        out = nbrs & ~S & ~vbit
        work = nbrs & S
        while work:
            bit = work & (-work)
            u = 0
            b = bit
            if b >= 1 << 32:
                u += 32
                b >>= 32
            if b >= 1 << 16:
                u += 16
                b >>= 16
            if b >= 1 << 8:
                u += 8
                b >>= 8
            if b >= 1 << 4:
                u += 4
                b >>= 4
            if b >= 1 << 2:
                u += 2
                b >>= 2
            if b >= 2:
                u += 1
            work ^= bit
            new = adj[u] & ~seen
            seen |= new
            out |= new & ~S
            work |= new & S
        return popcount(out)

    full = (1 << n) - 1
    dp = np.full(full + 1, 127, np.int8)
    dp[0] = -1
    for S in range(1, full + 1):
        best = 127
        for v in range(n):
            bit = 1 << v
            if not S & bit:
                continue
            S2 = S ^ bit
            prev = dp[S2]
            if prev >= best:
                continue
            bd = back_degree(adj, S2, v)
            val = prev if prev > bd else bd
            if val < best:
                best = val
        dp[S] = best
    width = int(dp[full])

    # Suffix feasibility at the optimum, then greedy lexicographic pick.
    feas = np.zeros(full + 1, np.bool_)
    feas[full] = True
    for P in range(full - 1, -1, -1):
        ok = False
        for v in range(n):
            bit = 1 << v
            if P & bit:
                continue
            if feas[P | bit] and back_degree(adj, P, v) <= width:
                ok = True
                break
        feas[P] = ok

    order = np.full(n, -1, np.int64)
    P = 0
    for i in range(n):
        for v in range(n):
            bit = 1 << v
            if P & bit:
                continue
            if feas[P | bit] and back_degree(adj, P, v) <= width:
                order[i] = v
                P |= bit
                break
    return width, order


def _treewidth_oracle(adj, n):
    """Minimum over all n! elimination orderings of the maximum back-degree.

    Branches whose running maximum already reaches the best completed
    ordering are cut; that preserves the exact minimum because the
    running maximum only grows along a prefix.  Fill edges are added
    explicitly when a vertex is eliminated.
    """

    def popcount(x):
        x = x - ((x >> 1) & _M1)
        x = (x & _M2) + ((x >> 2) & _M2)
        x = (x + (x >> 4)) & _M4
        x = x + (x >> 8)
        x = x + (x >> 16)
        x = x + (x >> 32)
        return x & 0x7F

    best = n
    adjstack = np.zeros((n + 1, n), np.int64)
    for i in range(n):
        adjstack[0, i] = adj[i]
    remstack = np.zeros(n + 1, np.int64)
    remstack[0] = (1 << n) - 1
    maxstack = np.zeros(n + 1, np.int64)
    choice = np.zeros(n + 1, np.int64)
    depth = 0
    while depth >= 0:
        rem = remstack[depth]
        if rem == 0:
            if maxstack[depth] < best:
                best = maxstack[depth]
            depth -= 1
            continue
        v = choice[depth]
        while v < n and not (rem >> v) & 1:
            v += 1
        if v >= n:
            depth -= 1
            continue
        choice[depth] = v + 1
        rem_after = rem & ~(1 << v)
        nbrs = adjstack[depth, v] & rem_after
        d = popcount(nbrs)
        newmax = maxstack[depth] if maxstack[depth] > d else d
        if newmax >= best:
            continue
        nd = depth + 1
        for i in range(n):
            adjstack[nd, i] = adjstack[depth, i]
        m = nbrs
        while m:
            bit = m & (-m)
            u = 0
            b = bit
            if b >= 1 << 32:
                u += 32
                b >>= 32
            if b >= 1 << 16:
                u += 16
                b >>= 16
            if b >= 1 << 8:
                u += 8
                b >>= 8
            if b >= 1 << 4:
                u += 4
                b >>= 4
            if b >= 1 << 2:
                u += 2
                b >>= 2
            if b >= 2:
                u += 1
            m ^= bit
            adjstack[nd, u] |= nbrs & ~bit
        remstack[nd] = rem_after
        maxstack[nd] = newmax
        choice[nd] = 0
        depth = nd
    return best


def _canonical_codes(codes, n, perms, out):
    """Minimum edge-code over all vertex permutations, for a batch of graphs.

    ``codes[i]`` packs the upper-triangle adjacency of an n-vertex graph:
    pair (i, j), i < j, sits at bit ``i*n - i*(i+1)//2 + (j - i - 1)``.
    ``perms`` holds every permutation of range(n), one per row.
    """
    nperms = perms.shape[0]
    for g in range(codes.shape[0]):
        code = codes[g]
        best = code
        for p in range(nperms):
            c = 0
            k = 0
            for i in range(n):
                for j in range(i + 1, n):
                    if (code >> k) & 1:
                        a = perms[p, i]
                        b = perms[p, j]
                        if a > b:
                            a, b = b, a
                        c |= 1 << (a * n - (a * (a + 1)) // 2 + (b - a - 1))
                    k += 1
            if c < best:
                best = c
        out[g] = best


treewidth_dp_py = _treewidth_dp
treewidth_oracle_py = _treewidth_oracle
canonical_codes_py = _canonical_codes

if JIT_ENABLED:
    treewidth_dp = jit_compile(_treewidth_dp)
    treewidth_oracle = jit_compile(_treewidth_oracle)
    canonical_codes = jit_compile(_canonical_codes)
else:
    treewidth_dp = _treewidth_dp
    treewidth_oracle = _treewidth_oracle
    canonical_codes = _canonical_codes
