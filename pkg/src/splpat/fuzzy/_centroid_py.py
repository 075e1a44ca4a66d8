"""Pure-Python centroid kernel.

Fallback for environments without the compiled extension.  The arithmetic
(operation kinds and their order) mirrors ``_centroid.pyx`` exactly so both
kernels return bit-identical doubles.
"""

BACKEND = "python"


def centroid(xs, table, clips):
    """Centroid of the clipped max-curve over a uniform grid.

    ``xs`` holds the n grid abscissas, ``table`` the per-term memberships as
    one flat term-major block of n values per term, and ``clips`` one clip
    level per term.  Trapezoid-rule weights (half at both ends) cancel the
    grid step in the numerator/denominator ratio.
    """
    npts = len(xs)
    nterms = len(clips)
    last = npts - 1
    num = 0.0
    den = 0.0
    for i in range(npts):
        mu = 0.0
        for k in range(nterms):
            m = table[k * npts + i]
            ck = clips[k]
            v = ck if ck < m else m
            if v > mu:
                mu = v
        w = 0.5 if (i == 0 or i == last) else 1.0
        t = w * mu
        den += t
        num += t * xs[i]
    return num / den
