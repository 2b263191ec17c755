# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""int64 lattice-point scan kernel.

Mirror of ``scan.tight_histogram_pure``; the Python dispatcher only calls
this after proving that every intermediate value fits in int64, so plain
C arithmetic is exact here.  Returns None when the mask table would
overflow (the dispatcher then reruns the pure scan).
"""

from libc.stdint cimport int64_t, uint64_t
from libc.stdlib cimport calloc, free

DEF HIST_CAP = 8192  # power of two; distinct masks = faces met, desk scale


cdef struct ScanState:
    int n
    int m
    int64_t *lo
    int64_t *hi
    int64_t *normals    # m rows of n entries, row-major
    int64_t *offsets
    int64_t *max_tail   # (n + 1) rows of m entries
    int64_t *partial    # (n + 1) rows of m entries, one scratch row per depth
    # open-addressing histogram
    uint64_t *keys
    int64_t *counts
    char *used
    size_t fill


cdef inline int64_t _floordiv(int64_t a, int64_t b) noexcept:
    cdef int64_t q = a / b
    if (a % b != 0) and ((a < 0) != (b < 0)):
        q -= 1
    return q


cdef inline bint _hist_add(ScanState *st, uint64_t mask) noexcept:
    cdef size_t idx = (mask * <uint64_t>0x9E3779B97F4A7C15) & (HIST_CAP - 1)
    while st.used[idx] and st.keys[idx] != mask:
        idx = (idx + 1) & (HIST_CAP - 1)
    if not st.used[idx]:
        if st.fill * 2 >= HIST_CAP:
            return False
        st.used[idx] = 1
        st.keys[idx] = mask
        st.counts[idx] = 0
        st.fill += 1
    st.counts[idx] += 1
    return True


cdef bint _rec(ScanState *st, int d) noexcept:
    cdef int f, m = st.m
    cdef int64_t x, xlo, xhi, c, rem, q
    cdef int64_t *par = st.partial + d * m
    cdef int64_t *nxt
    cdef int64_t *tail
    cdef uint64_t mask, forced
    cdef bint ok

    if d == st.n - 1:
        xlo = st.lo[d]
        xhi = st.hi[d]
        forced = 0
        for f in range(m):
            c = st.normals[f * st.n + d]
            rem = st.offsets[f] - par[f]
            if c > 0:
                q = -_floordiv(-rem, c)
                if q > xlo:
                    xlo = q
            elif c < 0:
                q = _floordiv(rem, c)
                if q < xhi:
                    xhi = q
            else:
                if rem > 0:
                    return True
                if rem == 0:
                    forced |= (<uint64_t>1) << f
            if xlo > xhi:
                return True
        x = xlo
        while x <= xhi:
            mask = forced
            for f in range(m):
                c = st.normals[f * st.n + d]
                if c != 0 and par[f] + c * x == st.offsets[f]:
                    mask |= (<uint64_t>1) << f
            if not _hist_add(st, mask):
                return False
            x += 1
        return True

    tail = st.max_tail + (d + 1) * m
    nxt = st.partial + (d + 1) * m
    x = st.lo[d]
    while x <= st.hi[d]:
        ok = True
        for f in range(m):
            nxt[f] = par[f] + st.normals[f * st.n + d] * x
            if nxt[f] + tail[f] < st.offsets[f]:
                ok = False
                break
        if ok:
            if not _rec(st, d + 1):
                return False
        x += 1
    return True


def tight_histogram_i64(lo, hi, normals, offsets):
    """Histogram {tight mask: count}; arguments as in the pure kernel."""
    cdef int n = len(lo)
    cdef int m = len(normals)
    cdef int d, f, i
    cdef int64_t c, best_l, best_h
    cdef ScanState st
    cdef bint complete
    cdef dict out = {}

    for i in range(n):
        if lo[i] > hi[i]:
            return out
    if n == 0:
        return {0: 1}

    st.n = n
    st.m = m
    st.fill = 0
    st.lo = <int64_t *>calloc(n, sizeof(int64_t))
    st.hi = <int64_t *>calloc(n, sizeof(int64_t))
    st.normals = <int64_t *>calloc(max(m * n, 1), sizeof(int64_t))
    st.offsets = <int64_t *>calloc(max(m, 1), sizeof(int64_t))
    st.max_tail = <int64_t *>calloc(max((n + 1) * m, 1), sizeof(int64_t))
    st.partial = <int64_t *>calloc(max((n + 1) * m, 1), sizeof(int64_t))
    st.keys = <uint64_t *>calloc(HIST_CAP, sizeof(uint64_t))
    st.counts = <int64_t *>calloc(HIST_CAP, sizeof(int64_t))
    st.used = <char *>calloc(HIST_CAP, sizeof(char))
    try:
        for i in range(n):
            st.lo[i] = lo[i]
            st.hi[i] = hi[i]
        for f in range(m):
            st.offsets[f] = offsets[f]
            for i in range(n):
                st.normals[f * n + i] = normals[f][i]
        for d in range(n - 1, -1, -1):
            for f in range(m):
                c = st.normals[f * n + d]
                best_l = c * st.lo[d]
                best_h = c * st.hi[d]
                st.max_tail[d * m + f] = st.max_tail[(d + 1) * m + f] + (
                    best_l if best_l > best_h else best_h
                )
        complete = _rec(&st, 0)
        if not complete:
            return None
        for i in range(HIST_CAP):
            if st.used[i]:
                out[int(st.keys[i])] = int(st.counts[i])
        return out
    finally:
        free(st.lo)
        free(st.hi)
        free(st.normals)
        free(st.offsets)
        free(st.max_tail)
        free(st.partial)
        free(st.keys)
        free(st.counts)
        free(st.used)
