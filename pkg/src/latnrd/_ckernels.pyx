# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot kernels in ``_pykernels``.

Same algorithms, run on int64 with the GIL released. Callers must have
checked the overflow guard in ``latnrd.kernels`` first; nothing here
detects overflow.
"""

from libc.stdlib cimport malloc, realloc, free

ctypedef long long i64


cdef inline i64 floordiv(i64 a, i64 b) nogil:
    # b > 0
    cdef i64 q = a // b
    if (a % b != 0) and (a < 0):
        q -= 1
    return q


cdef inline i64 iabs(i64 a) nogil:
    return -a if a < 0 else a


def enumerate_coset(dets, rows, parity, bound):
    cdef int n = len(rows)
    cdef int i, j, k
    cdef i64 *D = <i64 *> malloc((n + 1) * sizeof(i64))
    cdef i64 *R = <i64 *> malloc(n * n * sizeof(i64))
    cdef i64 *par = <i64 *> malloc(n * sizeof(i64))
    cdef i64 *x = <i64 *> malloc(n * sizeof(i64))
    cdef i64 *w = <i64 *> malloc(n * sizeof(i64))
    cdef i64 *p = <i64 *> malloc(n * sizeof(i64))
    cdef i64 *udn = <i64 *> malloc(n * sizeof(i64))
    cdef i64 *uup = <i64 *> malloc(n * sizeof(i64))
    cdef i64 cap = 64
    cdef i64 count = 0
    cdef i64 *buf = <i64 *> malloc(cap * n * sizeof(i64))
    cdef i64 best = bound
    cdef i64 dk, dk1, y, ydn, yup, u, q, acc
    cdef bint failed = False
    try:
        for i in range(n + 1):
            D[i] = dets[i]
        for i in range(n):
            par[i] = parity[i]
            for j in range(n):
                R[i * n + j] = rows[i][j]
        with nogil:
            k = n - 1
            w[k] = 0
            # init level k
            dk1 = D[k + 1]
            acc = 0
            p[k] = 0
            udn[k] = floordiv(-(p[k] + dk1 * par[k]), 2 * dk1)
            uup[k] = udn[k] + 1
            while True:
                dk = D[k]
                dk1 = D[k + 1]
                ydn = dk1 * (par[k] + 2 * udn[k]) + p[k]
                yup = dk1 * (par[k] + 2 * uup[k]) + p[k]
                if -ydn <= yup:
                    y = ydn
                    u = udn[k]
                    udn[k] -= 1
                else:
                    y = yup
                    u = uup[k]
                    uup[k] += 1
                if y * y > dk * (dk1 * best - w[k]):
                    k += 1
                    if k == n:
                        break
                    continue
                x[k] = par[k] + 2 * u
                if k == 0:
                    q = (w[0] + y * y) // dk1
                    if q < best:
                        best = q
                        count = 0
                    if count == cap:
                        cap *= 2
                        buf = <i64 *> realloc(buf, cap * n * sizeof(i64))
                        if buf == NULL:
                            failed = True
                            break
                    for j in range(n):
                        buf[count * n + j] = x[j]
                    count += 1
                else:
                    w[k - 1] = (dk * w[k] + y * y) // dk1
                    k -= 1
                    acc = 0
                    for j in range(k + 1, n):
                        acc += R[k * n + j] * x[j]
                    p[k] = acc
                    dk1 = D[k + 1]
                    udn[k] = floordiv(-(acc + dk1 * par[k]), 2 * dk1)
                    uup[k] = udn[k] + 1
        if failed:
            raise MemoryError()
        found = [tuple(buf[i * n + j] for j in range(n)) for i in range(count)]
        return best, found
    finally:
        free(D); free(R); free(par); free(x); free(w); free(p)
        free(udn); free(uup); free(buf)


cdef bint solve_ff(i64 *m, int n, i64 *nums, i64 *den) nogil:
    # m is n x (n+1), row-major, destroyed
    cdef int i, j, k, r
    cdef i64 prev = 1
    cdef i64 pk, f, t
    cdef int w = n + 1
    for k in range(n):
        if m[k * w + k] == 0:
            r = -1
            for i in range(k + 1, n):
                if m[i * w + k] != 0:
                    r = i
                    break
            if r < 0:
                return False
            for j in range(w):
                t = m[k * w + j]
                m[k * w + j] = m[r * w + j]
                m[r * w + j] = t
        pk = m[k * w + k]
        for i in range(n):
            if i == k:
                continue
            f = m[i * w + k]
            for j in range(w):
                if j != k:
                    m[i * w + j] = (pk * m[i * w + j] - f * m[k * w + j]) // prev
            m[i * w + k] = 0
        prev = pk
    den[0] = m[0]
    for i in range(n):
        nums[i] = m[i * w + n]
    if den[0] < 0:
        den[0] = -den[0]
        for i in range(n):
            nums[i] = -nums[i]
    return True


cdef i64 gcd64(i64 a, i64 b) nogil:
    a = iabs(a)
    b = iabs(b)
    while b:
        a, b = b, a % b
    return a


def facet_subset_vertices(a, b):
    cdef int m = len(a)
    cdef int n = len(a[0])
    cdef int i, j, r, t
    cdef i64 *A = <i64 *> malloc(m * n * sizeof(i64))
    cdef i64 *B = <i64 *> malloc(m * sizeof(i64))
    cdef i64 *work = <i64 *> malloc(n * (n + 1) * sizeof(i64))
    cdef int *idx = <int *> malloc(n * sizeof(int))
    cdef i64 *nums = <i64 *> malloc(n * sizeof(i64))
    cdef i64 den, g, lhs
    cdef i64 cap = 256
    cdef i64 count = 0
    cdef i64 *buf = <i64 *> malloc(cap * (n + 1) * sizeof(i64))
    cdef bint ok, failed = False, done = False
    try:
        for i in range(m):
            B[i] = b[i]
            for j in range(n):
                A[i * n + j] = a[i][j]
        if n > m:
            return set()
        with nogil:
            for i in range(n):
                idx[i] = i
            while not done:
                for r in range(n):
                    for j in range(n):
                        work[r * (n + 1) + j] = A[idx[r] * n + j]
                    work[r * (n + 1) + n] = B[idx[r]]
                if solve_ff(work, n, nums, &den):
                    g = den
                    for j in range(n):
                        g = gcd64(g, nums[j])
                    den = den // g
                    for j in range(n):
                        nums[j] = nums[j] // g
                    ok = True
                    for r in range(m):
                        lhs = 0
                        for j in range(n):
                            lhs += A[r * n + j] * nums[j]
                        if lhs > B[r] * den:
                            ok = False
                            break
                    if ok:
                        if count == cap:
                            cap *= 2
                            buf = <i64 *> realloc(buf, cap * (n + 1) * sizeof(i64))
                            if buf == NULL:
                                failed = True
                                break
                        for j in range(n):
                            buf[count * (n + 1) + j] = nums[j]
                        buf[count * (n + 1) + n] = den
                        count += 1
                # next combination
                t = n - 1
                while t >= 0 and idx[t] == m - n + t:
                    t -= 1
                if t < 0:
                    done = True
                else:
                    idx[t] += 1
                    for j in range(t + 1, n):
                        idx[j] = idx[j - 1] + 1
        if failed:
            raise MemoryError()
        return {(tuple(buf[i * (n + 1) + j] for j in range(n)), buf[i * (n + 1) + n])
                for i in range(count)}
    finally:
        free(A); free(B); free(work); free(idx); free(nums); free(buf)
