"""Plain nested-list linear algebra over Fractions or residues.

Independent of the package's tensor engine; used to cross-check it.
"""

from fractions import Fraction


def red(x, p):
    return x % p if p else Fraction(x)


def matmul(a, b, p=None):
    return [[red(sum(a[i][k] * b[k][j] for k in range(len(b))), p) for j in range(len(b[0]))]
            for i in range(len(a))]


def kron(a, b, p=None):
    """Row-major Kronecker product."""
    rows = []
    for i in range(len(a)):
        for k in range(len(b)):
            rows.append([red(a[i][j] * b[k][l], p) for j in range(len(a[0])) for l in range(len(b[0]))])
    return rows


def eye(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def braid(dx, dy, q, p=None):
    """Matrix of e_i (x) e_j -> q**(dx_i dy_j) e_j (x) e_i."""
    n, m = len(dx), len(dy)
    out = [[Fraction(0)] * (n * m) for _ in range(n * m)]
    for i in range(n):
        for j in range(m):
            out[j * n + i][i * m + j] = red(q ** (dx[i] * dy[j]), p)
    return out
