# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled kernel for the exhaustive binary-assignment scan.

Scores an assignment v (bitmask over vertices) as the sum over contexts of a
precomputed per-pattern table, where the pattern packs the v-bits of the
context's members.  Iterates a half-open range of assignments and keeps the
best score, ties resolved toward the smallest assignment.
"""


def best_over_range(int[:, ::1] members, long long[:, ::1] tables,
                    unsigned long long lo, unsigned long long hi):
    """Return (best_score, best_assignment) over assignments in [lo, hi)."""
    cdef Py_ssize_t m = members.shape[0]
    cdef Py_ssize_t d = members.shape[1]
    cdef unsigned long long v, pat
    cdef long long score
    cdef long long best_score = -1
    cdef unsigned long long best_v = lo
    cdef Py_ssize_t x, j
    if hi <= lo:
        raise ValueError("empty scan range")
    with nogil:
        for v in range(lo, hi):
            score = 0
            for x in range(m):
                pat = 0
                for j in range(d):
                    pat |= ((v >> members[x, j]) & 1ULL) << j
                score += tables[x, pat]
            # strict improvement keeps the first (smallest) maximizer
            if score > best_score:
                best_score = score
                best_v = v
    return int(best_score), int(best_v)
