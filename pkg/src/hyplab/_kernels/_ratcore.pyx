# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled rational kernels.

Contract matches `hyplab._kernels.pure`: rationals are (num, den) int pairs
with den > 0 and gcd == 1, term lists are parallel (elems, nums, dens).
Arithmetic runs in C on int64 values with __int128 intermediates and falls
back to Python big ints per call when anything does not fit.
"""

from cpython.long cimport PyLong_AsLongLongAndOverflow

from math import gcd as _pygcd

BACKEND = "cython"

cdef extern from *:
    ctypedef long long int128 "__int128"

DEF LLMAX = 9223372036854775807

cdef inline int128 _gcd128(int128 a, int128 b) noexcept:
    cdef int128 t
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b != 0:
        t = a % b
        a = b
        b = t
    return a

cdef inline bint _fits64(int128 x) noexcept:
    return -LLMAX - 1 <= x <= LLMAX


cdef inline object _py_reduce(object n, object d):
    if d == 0:
        raise ZeroDivisionError("rational with zero denominator")
    if n == 0:
        return (0, 1)
    if d < 0:
        n = -n
        d = -d
    g = _pygcd(n, d)
    if g > 1:
        n //= g
        d //= g
    return (n, d)


cdef inline object _py_add(object n1, object d1, object n2, object d2):
    return _py_reduce(n1 * d2 + n2 * d1, d1 * d2)


def reduce_frac(n, d):
    """Lowest terms, positive denominator."""
    cdef long long cn, cd
    cdef int of1 = 0, of2 = 0
    cdef int128 wn, wd, g
    cn = PyLong_AsLongLongAndOverflow(n, &of1)
    cd = PyLong_AsLongLongAndOverflow(d, &of2)
    if of1 or of2:
        return _py_reduce(n, d)
    if cd == 0:
        raise ZeroDivisionError("rational with zero denominator")
    if cn == 0:
        return (0, 1)
    wn = cn
    wd = cd
    if wd < 0:
        wn = -wn
        wd = -wd
    g = _gcd128(wn, wd)
    if g > 1:
        wn = wn / g
        wd = wd / g
    return (int(<long long>wn), int(<long long>wd))


def add_frac(n1, d1, n2, d2):
    cdef long long a, b, c, d
    cdef int of = 0, of2 = 0, of3 = 0, of4 = 0
    cdef int128 wn, wd, g
    a = PyLong_AsLongLongAndOverflow(n1, &of)
    b = PyLong_AsLongLongAndOverflow(d1, &of2)
    c = PyLong_AsLongLongAndOverflow(n2, &of3)
    d = PyLong_AsLongLongAndOverflow(d2, &of4)
    if of or of2 or of3 or of4:
        return _py_add(n1, d1, n2, d2)
    wn = <int128> a * d + <int128> c * b
    wd = <int128> b * d
    if wn == 0:
        return (0, 1)
    g = _gcd128(wn, wd)
    if g > 1:
        wn = wn / g
        wd = wd / g
    if _fits64(wn) and _fits64(wd):
        return (int(<long long>wn), int(<long long>wd))
    return (int(wn_to_py(wn)), int(wn_to_py(wd)))


cdef object wn_to_py(int128 x):
    # __int128 -> Python int via two 64-bit halves
    cdef bint neg = x < 0
    if neg:
        x = -x
    cdef unsigned long long lo = <unsigned long long> (x & <int128>0xFFFFFFFFFFFFFFFF)
    cdef unsigned long long hi = <unsigned long long> (x >> 64)
    val = (int(hi) << 64) | int(lo)
    return -val if neg else val


def mul_frac(n1, d1, n2, d2):
    cdef long long a, b, c, d
    cdef int of = 0, of2 = 0, of3 = 0, of4 = 0
    cdef int128 wn, wd, g
    a = PyLong_AsLongLongAndOverflow(n1, &of)
    b = PyLong_AsLongLongAndOverflow(d1, &of2)
    c = PyLong_AsLongLongAndOverflow(n2, &of3)
    d = PyLong_AsLongLongAndOverflow(d2, &of4)
    if of or of2 or of3 or of4:
        return _py_reduce(n1 * n2, d1 * d2)
    wn = <int128> a * c
    wd = <int128> b * d
    if wn == 0:
        return (0, 1)
    g = _gcd128(wn, wd)
    if g > 1:
        wn = wn / g
        wd = wd / g
    if _fits64(wn) and _fits64(wd):
        return (int(<long long>wn), int(<long long>wd))
    return (wn_to_py(wn), wn_to_py(wd))


def sum_frac(list nums, list dens):
    """Exact sum of a list of reduced rationals."""
    cdef Py_ssize_t i = 0, m = len(nums)
    cdef long long n = 0, d = 1, tn, td
    cdef int128 wn, wd, g
    cdef int of1, of2
    cdef object on, od
    while i < m:
        of1 = of2 = 0
        tn = PyLong_AsLongLongAndOverflow(nums[i], &of1)
        td = PyLong_AsLongLongAndOverflow(dens[i], &of2)
        if of1 or of2:
            break
        wn = <int128> n * td + <int128> tn * d
        wd = <int128> d * td
        g = _gcd128(wn, wd)
        if g > 1:
            wn = wn / g
            wd = wd / g
        if not (_fits64(wn) and _fits64(wd)):
            break
        n = <long long> wn
        d = <long long> wd
        i += 1
    if i == m:
        return (int(n), int(d))
    # big-int continuation from index i
    on = int(n)
    od = int(d)
    for j in range(i, m):
        on = on * dens[j] + nums[j] * od
        od = od * dens[j]
        g2 = _pygcd(on, od)
        if g2 > 1:
            on //= g2
            od //= g2
    return (on, od)


def dot_frac(list nums, list dens, list wnums, list wdens):
    """Exact sum of products sum_i (nums[i]/dens[i]) * (wnums[i]/wdens[i])."""
    cdef Py_ssize_t i = 0, m = len(nums)
    cdef long long n = 0, d = 1, a, b, c, e
    cdef int128 pn, pd, wn, wd, g
    cdef int of1, of2, of3, of4
    cdef object on, od, tn, td
    while i < m:
        of1 = of2 = of3 = of4 = 0
        a = PyLong_AsLongLongAndOverflow(nums[i], &of1)
        b = PyLong_AsLongLongAndOverflow(dens[i], &of2)
        c = PyLong_AsLongLongAndOverflow(wnums[i], &of3)
        e = PyLong_AsLongLongAndOverflow(wdens[i], &of4)
        if of1 or of2 or of3 or of4:
            break
        pn = <int128> a * c
        pd = <int128> b * e
        g = _gcd128(pn, pd)
        if g > 1:
            pn = pn / g
            pd = pd / g
        if not (_fits64(pn) and _fits64(pd)):
            break
        wn = <int128> n * <long long> pd + pn * d
        wd = <int128> d * <long long> pd
        g = _gcd128(wn, wd)
        if g > 1:
            wn = wn / g
            wd = wd / g
        if not (_fits64(wn) and _fits64(wd)):
            break
        n = <long long> wn
        d = <long long> wd
        i += 1
    if i == m:
        return (int(n), int(d))
    on = int(n)
    od = int(d)
    for j in range(i, m):
        tn = nums[j] * wnums[j]
        td = dens[j] * wdens[j]
        on = on * td + tn * od
        od = od * td
        g2 = _pygcd(on, od)
        if g2 > 1:
            on //= g2
            od //= g2
    return (on, od)


def scale_terms(list nums, list dens, cn, cd):
    """Multiply every coefficient by cn/cd; returns new reduced lists."""
    cdef Py_ssize_t i, m = len(nums)
    out_n = []
    out_d = []
    for i in range(m):
        t = mul_frac(nums[i], dens[i], cn, cd)
        out_n.append(t[0])
        out_d.append(t[1])
    return out_n, out_d


def merge_terms(list elems, list nums, list dens):
    """Canonicalize a raw term list (group, sum, drop zeros, reduce, sort)."""
    cdef Py_ssize_t i, m = len(elems)
    cdef dict acc = {}
    for i in range(m):
        n = nums[i]
        if n == 0:
            continue
        e = elems[i]
        prev = acc.get(e)
        if prev is None:
            acc[e] = reduce_frac(n, dens[i])
        else:
            acc[e] = add_frac(prev[0], prev[1], n, dens[i])
    return finalize_accumulator(acc)


def accumulate_scaled(dict acc, list elems, list nums, list dens, cn, cd):
    """acc[e] += (cn/cd) * (n/d) for every term; acc maps elem -> (num, den)."""
    cdef Py_ssize_t i, m = len(elems)
    for i in range(m):
        t = mul_frac(nums[i], dens[i], cn, cd)
        e = elems[i]
        prev = acc.get(e)
        if prev is None:
            acc[e] = t
        else:
            acc[e] = add_frac(prev[0], prev[1], t[0], t[1])


def finalize_accumulator(dict acc):
    """Sorted canonical parallel lists from an accumulator dict."""
    elems = []
    nums = []
    dens = []
    for e in sorted(acc):
        t = acc[e]
        if t[0] == 0:
            continue
        elems.append(e)
        nums.append(t[0])
        dens.append(t[1])
    return elems, nums, dens
