# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled Littlewood-Richardson kernel.

Same enumeration as _lrkernel_py (the reference implementation): tableaux are
chains of horizontal strips added to the inner shape under the ballot
condition, and every leaf of the walk is one tableau.  Shapes live in small C
arrays; Python objects appear only at the leaves.
"""

IMPLEMENTATION = "cython"

DEF MAXROWS = 80


cdef bint _contains_c(int* outer, int no, int* inner, int ni):
    cdef int i
    if ni > no:
        return 0
    for i in range(ni):
        if inner[i] > outer[i]:
            return 0
    return 1


cdef tuple _shape_tuple(int* shape, int slen):
    cdef int i
    return tuple([shape[i] for i in range(slen)])


# --- product expansion -----------------------------------------------------

cdef void _prod_label(int li, int nlab, int* sizes, int* shape, int slen,
                      int* prev, int* outer, long long* counter, dict out):
    cdef int old[MAXROWS]
    cdef int cum[MAXROWS]
    cdef int i
    if li == nlab:
        if counter != NULL:
            counter[0] += 1
        else:
            key = _shape_tuple(shape, slen)
            if key in out:
                out[key] += 1
            else:
                out[key] = 1
        return
    for i in range(slen):
        old[i] = shape[i]
    old[slen] = 0
    shape[slen] = 0
    _prod_rows(0, slen + 1, sizes[li], 0, shape, old,
               prev if li > 0 else NULL, cum,
               li, nlab, sizes, outer, counter, out)


cdef void _prod_rows(int r, int nrows, int left, int placed,
                     int* shape, int* old, int* prev, int* cum,
                     int li, int nlab, int* sizes, int* outer,
                     long long* counter, dict out):
    cdef int base, lo, hi, cap, a, q, nslen
    if left == 0:
        for q in range(r, nrows):
            cum[q] = placed
        nslen = nrows if shape[nrows - 1] > 0 else nrows - 1
        _prod_label(li + 1, nlab, sizes, shape, nslen, cum, outer, counter, out)
        return
    if r == nrows:
        return
    base = old[r]
    lo = left - base
    if lo < 0:
        lo = 0
    hi = left
    if r > 0:
        cap = old[r - 1] - base
        if cap < hi:
            hi = cap
        if prev != NULL:
            cap = prev[r - 1] - placed
            if cap < hi:
                hi = cap
    elif prev != NULL:
        hi = 0
    if outer != NULL:
        cap = outer[r] - base
        if cap < hi:
            hi = cap
    a = lo
    while a <= hi:
        shape[r] = base + a
        cum[r] = placed + a
        _prod_rows(r + 1, nrows, left - a, placed + a, shape, old, prev, cum,
                   li, nlab, sizes, outer, counter, out)
        a += 1
    shape[r] = base


def expand_product(lam, mu):
    """Coefficient table of s_lam * s_mu: dict mapping shape tuple -> count."""
    if sum(mu) > sum(lam):
        lam, mu = mu, lam
    if len(lam) + len(mu) + 2 > MAXROWS:
        raise ValueError("shape too deep for the compiled kernel")
    cdef int shape[MAXROWS]
    cdef int sizes[MAXROWS]
    cdef int i, slen, nlab
    slen = len(lam)
    nlab = len(mu)
    for i in range(slen):
        shape[i] = lam[i]
    for i in range(nlab):
        sizes[i] = mu[i]
    out = {}
    _prod_label(0, nlab, sizes, shape, slen, NULL, NULL, NULL, out)
    return out


def product_coefficient(lam, mu, nu):
    """Multiplicity of s_nu in s_lam * s_mu (0 on any degree mismatch)."""
    if sum(lam) + sum(mu) != sum(nu):
        return 0
    if sum(mu) > sum(lam):
        lam, mu = mu, lam
    if len(nu) + 2 > MAXROWS:
        raise ValueError("shape too deep for the compiled kernel")
    cdef int shape[MAXROWS]
    cdef int sizes[MAXROWS]
    cdef int outer[MAXROWS]
    cdef int i, slen, nlab
    cdef long long counter = 0
    slen = len(lam)
    nlab = len(mu)
    for i in range(MAXROWS):
        outer[i] = 0
    for i in range(len(nu)):
        outer[i] = nu[i]
    for i in range(slen):
        shape[i] = lam[i]
    if not _contains_c(outer, len(nu), shape, slen):
        return 0
    for i in range(nlab):
        sizes[i] = mu[i]
    _prod_label(0, nlab, sizes, shape, slen, NULL, outer, &counter, None)
    return counter


# --- skew expansion --------------------------------------------------------

cdef void _skew_label(int* shape, int slen, int* prev, int placed, int total,
                      int* outer, int* content, int clen, dict out):
    cdef int old[MAXROWS]
    cdef int cum[MAXROWS]
    cdef int i, size, mx
    if placed == total:
        key = _shape_tuple(content, clen)
        if key in out:
            out[key] += 1
        else:
            out[key] = 1
        return
    mx = total - placed
    if prev != NULL and content[clen - 1] < mx:
        mx = content[clen - 1]
    for i in range(slen):
        old[i] = shape[i]
    old[slen] = 0
    shape[slen] = 0
    size = mx
    while size >= 1:
        content[clen] = size
        _skew_rows(0, slen + 1, size, 0, shape, old, prev, cum,
                   placed, total, outer, content, clen, out)
        size -= 1


cdef void _skew_rows(int r, int nrows, int left, int placed_row,
                     int* shape, int* old, int* prev, int* cum,
                     int placed, int total, int* outer,
                     int* content, int clen, dict out):
    cdef int base, lo, hi, cap, a, q, nslen
    if left == 0:
        for q in range(r, nrows):
            cum[q] = placed_row
        nslen = nrows if shape[nrows - 1] > 0 else nrows - 1
        _skew_label(shape, nslen, cum, placed + content[clen], total,
                    outer, content, clen + 1, out)
        return
    if r == nrows:
        return
    base = old[r]
    lo = left - base
    if lo < 0:
        lo = 0
    hi = left
    if r > 0:
        cap = old[r - 1] - base
        if cap < hi:
            hi = cap
        if prev != NULL:
            cap = prev[r - 1] - placed_row
            if cap < hi:
                hi = cap
    elif prev != NULL:
        hi = 0
    if outer != NULL:
        cap = outer[r] - base
        if cap < hi:
            hi = cap
    a = lo
    while a <= hi:
        shape[r] = base + a
        cum[r] = placed_row + a
        _skew_rows(r + 1, nrows, left - a, placed_row + a, shape, old, prev,
                   cum, placed, total, outer, content, clen, out)
        a += 1
    shape[r] = base


def expand_skew(outer, inner):
    """Coefficient table of s_{outer/inner}: dict content tuple -> count."""
    cdef int shape[MAXROWS]
    cdef int cap[MAXROWS]
    cdef int content[MAXROWS]
    cdef int i, no, ni, total
    no = len(outer)
    ni = len(inner)
    if no + 2 > MAXROWS:
        raise ValueError("shape too deep for the compiled kernel")
    for i in range(MAXROWS):
        cap[i] = 0
    for i in range(no):
        cap[i] = outer[i]
    for i in range(ni):
        shape[i] = inner[i]
    if not _contains_c(cap, no, shape, ni):
        return {}
    if ni == 0:
        return {tuple(outer): 1}
    total = sum(outer) - sum(inner)
    if total == 0:
        return {(): 1}
    out = {}
    _skew_label(shape, ni, NULL, 0, total, cap, content, 0, out)
    return out
