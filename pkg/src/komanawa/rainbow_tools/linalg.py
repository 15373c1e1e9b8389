"""
created matt_dumont
on: 17/10/26
"""
from fractions import Fraction
from math import gcd
import numpy as np
from scipy import sparse


def is_prime(p):
    """
    check whether p is a prime (trial division, the moduli used here are tiny)

    :param p: integer
    :return: bool
    """
    p = int(p)
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _sparse_rows(matrix):
    matrix = sparse.csr_matrix(matrix)
    rows = []
    for i in range(matrix.shape[0]):
        start, stop = matrix.indptr[i], matrix.indptr[i + 1]
        row = {int(c): int(v) for c, v in zip(matrix.indices[start:stop], matrix.data[start:stop]) if v != 0}
        if row:
            rows.append(row)
    return rows


def _primitive(row):
    g = 0
    for v in row.values():
        g = gcd(g, v)
    if g > 1:
        row = {c: v // g for c, v in row.items()}
    return row


def integer_rank(matrix):
    """
    exact rank over the rationals of an integer matrix.

    Fraction-free elimination on the sparse rows of the matrix: each incoming row is reduced against the stored
    pivot rows (one per leading column) by integer cross multiplication, and stored rows are kept primitive
    (entries divided by their gcd) so the integers stay small.  The rank over Q is the number of stored pivots.

    :param matrix: scipy.sparse matrix or 2d array-like of integers
    :return: int
    """
    if not sparse.issparse(matrix):
        matrix = np.atleast_2d(np.asarray(matrix, dtype=np.int64))
    if matrix.shape[0] == 0 or matrix.shape[1] == 0:
        return 0
    pivots = {}
    for row in _sparse_rows(matrix):
        while row:
            col = min(row)
            pivot = pivots.get(col)
            if pivot is None:
                pivots[col] = _primitive(row)
                break
            g = gcd(pivot[col], row[col])
            f_row, f_pivot = pivot[col] // g, row[col] // g
            reduced = {}
            for c in row.keys() | pivot.keys():
                v = f_row * row.get(c, 0) - f_pivot * pivot.get(c, 0)
                if v:
                    reduced[c] = v
            row = _primitive(reduced)
    return len(pivots)


def rank_mod_p(matrix, p):
    """
    rank of an integer matrix over the prime field GF(p)

    :param matrix: 2d array-like of integers (entries are reduced mod p)
    :param p: prime modulus
    :return: int
    """
    assert is_prime(p), f'{p=} must be prime'
    work = np.atleast_2d(np.asarray(matrix, dtype=np.int64)) % p
    nrows, ncols = work.shape
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        nonzero = np.nonzero(work[rank:, col])[0]
        if len(nonzero) == 0:
            continue
        pivot_row = rank + nonzero[0]
        if pivot_row != rank:
            work[[rank, pivot_row]] = work[[pivot_row, rank]]
        inv = pow(int(work[rank, col]), -1, p)
        work[rank] = (work[rank] * inv) % p
        below = np.nonzero(work[rank + 1:, col])[0] + rank + 1
        if len(below):
            work[below] = (work[below] - np.outer(work[below, col], work[rank])) % p
        rank += 1
    return rank


def dense_rational_rank(matrix):
    """
    rank over the rationals by plain Gauss-Jordan elimination on Fraction entries.

    No sparsity or integer tricks, this is the slow reference used to cross check integer_rank.

    :param matrix: 2d array-like of integers or Fractions
    :return: int
    """
    work = np.array([[Fraction(v) for v in row] for row in np.atleast_2d(np.asarray(matrix))], dtype=object)
    if work.size == 0:
        return 0
    nrows, ncols = work.shape
    rank = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(rank, nrows):
            if work[i, col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != rank:
            work[[rank, pivot_row]] = work[[pivot_row, rank]]
        work[rank, :] = work[rank, :] / work[rank, col]
        for i in range(nrows):
            if i != rank and work[i, col] != 0:
                work[i, :] = work[i, :] - work[i, col] * work[rank, :]
        rank += 1
        if rank == nrows:
            break
    return rank
