# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled enumeration kernel; same search as _pykernel, C recursion.

Masks fit in 32 bits for n <= 5, and the sets of chosen/required masks
fit in a 64-bit word indexed by mask value.
"""

MAX_N = 5


cdef int _check(int n) except -1:
    if n < 0 or n > 5:
        raise ValueError(f"enumeration supports 0 <= n <= 5, got {n}")
    return (1 << n) - 1


cdef void _rec_collect(int s, int full, unsigned long long chosen_bits,
                       unsigned long long required, int* chosen, int depth,
                       list out):
    cdef int i, u, w, ok
    cdef unsigned long long req
    cdef tuple fam
    if s == full:
        fam = (0,) + tuple([chosen[i] for i in range(depth)]) + (full,)
        out.append(fam)
        return
    req = required
    ok = 1
    for i in range(depth):
        u = chosen[i]
        w = s | u
        if w != s and w != full:
            req |= (<unsigned long long>1) << w
        w = s & u
        if w != 0 and w != u and not (chosen_bits >> w) & 1:
            ok = 0
            break
    if ok:
        chosen[depth] = s
        _rec_collect(s + 1, full, chosen_bits | ((<unsigned long long>1) << s),
                     req & ~((<unsigned long long>1) << s), chosen, depth + 1, out)
    if not (required >> s) & 1:
        _rec_collect(s + 1, full, chosen_bits, required, chosen, depth, out)


cdef long _rec_count(int s, int full, unsigned long long chosen_bits,
                     unsigned long long required, int* chosen, int depth):
    cdef int i, u, w, ok
    cdef unsigned long long req
    cdef long total = 0
    if s == full:
        return 1
    req = required
    ok = 1
    for i in range(depth):
        u = chosen[i]
        w = s | u
        if w != s and w != full:
            req |= (<unsigned long long>1) << w
        w = s & u
        if w != 0 and w != u and not (chosen_bits >> w) & 1:
            ok = 0
            break
    if ok:
        chosen[depth] = s
        total += _rec_count(s + 1, full, chosen_bits | ((<unsigned long long>1) << s),
                            req & ~((<unsigned long long>1) << s), chosen, depth + 1)
    if not (required >> s) & 1:
        total += _rec_count(s + 1, full, chosen_bits, required, chosen, depth)
    return total


def topology_masks(int n):
    """All topologies on n points, each as its sorted tuple of open masks."""
    cdef int full = _check(n)
    cdef int chosen[32]
    if full == 0:
        return [(0,)]
    out = []
    _rec_collect(1, full, 1, 0, chosen, 0, out)
    return out


def count_topology_masks(int n):
    """Number of topologies on n points, without building the families."""
    cdef int full = _check(n)
    cdef int chosen[32]
    if full == 0:
        return 1
    return _rec_count(1, full, 1, 0, chosen, 0)
