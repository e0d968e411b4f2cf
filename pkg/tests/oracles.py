"""Independent reference computations used only by the tests."""

import itertools
import math


def laplace_det(M):
    n = len(M)
    if n == 0:
        return 1
    if n == 1:
        return M[0][0]
    return sum(
        (-1) ** j * M[0][j] * laplace_det([row[:j] + row[j + 1:] for row in M[1:]])
        for j in range(n)
        if M[0][j]
    )


def minor_gcd_factors(A):
    """Invariant factors from gcds of i x i minors."""
    m = len(A)
    n = len(A[0]) if A else 0
    factors = []
    prev = 1
    for i in range(1, min(m, n) + 1):
        g = 0
        for rows in itertools.combinations(range(m), i):
            for cols in itertools.combinations(range(n), i):
                g = math.gcd(g, laplace_det([[A[r][c] for c in cols] for r in rows]))
        if g == 0:
            break
        factors.append(g // prev)
        prev = g
    return factors


def brute_force_kernel_vectors(A, n, bound):
    """All integer w with A w = 0 and entries in [-bound, bound]."""
    return [
        w
        for w in itertools.product(range(-bound, bound + 1), repeat=n)
        if all(sum(a * x for a, x in zip(row, w)) == 0 for row in A)
    ]
