"""Reference implementations of the hot loops.

These run on any ordered numeric type (float, int, Fraction), so the exact
rational path of the weight-expansion engine goes through here too.  The
Cython module ``_kernels`` mirrors the float API one-for-one.
"""

from math import isqrt


def ball_index(k):
    """Largest d with d(d+1)/2 <= k, i.e. the multiplier of c_k(B(a))."""
    return (isqrt(8 * k + 1) - 1) // 2


def ball_sequence(a, kmax):
    return [a * ball_index(k) for k in range(kmax + 1)]


def maxplus_convolve(acc, seq):
    """out[k] = max_{j<=k} acc[j] + seq[k-j], for k < len(acc)."""
    n = len(acc)
    if len(seq) < n:
        raise ValueError("seq shorter than acc")
    out = []
    for k in range(n):
        best = acc[0] + seq[k]
        for j in range(1, k + 1):
            v = acc[j] + seq[k - j]
            if v > best:
                best = v
        out.append(best)
    return out
