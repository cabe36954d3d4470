"""Pure-Python rational kernels.

Same contract as the compiled `_ratcore` module.  A rational is a pair of
Python ints (num, den) with den > 0 and gcd(num, den) == 1; a term list is
three parallel lists (elems, nums, dens).  Canonical term lists have
distinct elements sorted ascending and no zero coefficients.
"""

from __future__ import annotations

from math import gcd

BACKEND = "pure"


def reduce_frac(n, d):
    """Lowest terms, positive denominator."""
    if d == 0:
        raise ZeroDivisionError("rational with zero denominator")
    if n == 0:
        return 0, 1
    if d < 0:
        n, d = -n, -d
    g = gcd(n, d)
    if g > 1:
        n //= g
        d //= g
    return n, d


def add_frac(n1, d1, n2, d2):
    return reduce_frac(n1 * d2 + n2 * d1, d1 * d2)


def mul_frac(n1, d1, n2, d2):
    return reduce_frac(n1 * n2, d1 * d2)


def sum_frac(nums, dens):
    """Exact sum of a list of reduced rationals."""
    n, d = 0, 1
    for i in range(len(nums)):
        n = n * dens[i] + nums[i] * d
        d *= dens[i]
        g = gcd(n, d)
        if g > 1:
            n //= g
            d //= g
    return n, d


def dot_frac(nums, dens, wnums, wdens):
    """Exact sum of products: sum_i (nums[i]/dens[i]) * (wnums[i]/wdens[i])."""
    n, d = 0, 1
    for i in range(len(nums)):
        tn = nums[i] * wnums[i]
        td = dens[i] * wdens[i]
        n = n * td + tn * d
        d *= td
        g = gcd(n, d)
        if g > 1:
            n //= g
            d //= g
    return n, d


def scale_terms(nums, dens, cn, cd):
    """Multiply every coefficient by cn/cd; returns new reduced lists."""
    out_n = []
    out_d = []
    for i in range(len(nums)):
        n, d = reduce_frac(nums[i] * cn, dens[i] * cd)
        out_n.append(n)
        out_d.append(d)
    return out_n, out_d


def merge_terms(elems, nums, dens):
    """Canonicalize a raw term list.

    Groups duplicate elements, sums coefficients exactly, drops zeros,
    reduces, and sorts by element.  Input coefficients need not be reduced.
    """
    acc = {}
    for i in range(len(elems)):
        n, d = nums[i], dens[i]
        if n == 0:
            continue
        e = elems[i]
        prev = acc.get(e)
        if prev is None:
            acc[e] = reduce_frac(n, d)
        else:
            acc[e] = add_frac(prev[0], prev[1], n, d)
    return finalize_accumulator(acc)


def accumulate_scaled(acc, elems, nums, dens, cn, cd):
    """acc[e] += (cn/cd) * (n/d) for every term; acc maps elem -> (num, den)."""
    for i in range(len(elems)):
        tn = nums[i] * cn
        td = dens[i] * cd
        e = elems[i]
        prev = acc.get(e)
        if prev is None:
            acc[e] = reduce_frac(tn, td)
        else:
            acc[e] = add_frac(prev[0], prev[1], tn, td)


def finalize_accumulator(acc):
    """Sorted canonical parallel lists from an accumulator dict."""
    elems = []
    nums = []
    dens = []
    for e in sorted(acc):
        n, d = acc[e]
        if n == 0:
            continue
        elems.append(e)
        nums.append(n)
        dens.append(d)
    return elems, nums, dens
