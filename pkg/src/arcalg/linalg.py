"""Exact kernels and lattice comparison over Z and GF2.

Integer computations use row reduction to Hermite normal form with Python
ints; no floating point anywhere.
"""

from __future__ import annotations


def _row_reduce_z(rows: list[list[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """Bring `rows` to row-style HNF, returning (H, U) with U unimodular, U*A = H."""
    m = len(rows)
    n = len(rows[0]) if rows else 0
    H = [list(r) for r in rows]
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    r = 0
    for col in range(n):
        # Euclidean elimination: gcd the column entries into row r.
        while True:
            pivots = [i for i in range(r, m) if H[i][col] != 0]
            if not pivots:
                break
            i0 = min(pivots, key=lambda i: abs(H[i][col]))
            if i0 != r:
                H[r], H[i0] = H[i0], H[r]
                U[r], U[i0] = U[i0], U[r]
            done = True
            for i in range(r + 1, m):
                if H[i][col]:
                    q = H[i][col] // H[r][col]
                    H[i] = [x - q * y for x, y in zip(H[i], H[r])]
                    U[i] = [x - q * y for x, y in zip(U[i], U[r])]
                    if H[i][col]:
                        done = False
            if done:
                break
        if r < m and H[r][col] != 0:
            if H[r][col] < 0:
                H[r] = [-x for x in H[r]]
                U[r] = [-x for x in U[r]]
            for i in range(r):
                q = H[i][col] // H[r][col]
                if q:
                    H[i] = [x - q * y for x, y in zip(H[i], H[r])]
                    U[i] = [x - q * y for x, y in zip(U[i], U[r])]
            r += 1
        if r == m:
            break
    return H, U


def hermite_normal_form(rows: list[list[int]]) -> list[list[int]]:
    """Canonical basis (HNF, nonzero rows) of the lattice spanned by `rows`."""
    if not rows:
        return []
    H, _ = _row_reduce_z(rows)
    return [r for r in H if any(r)]


def lattices_equal(gens_a: list[list[int]], gens_b: list[list[int]]) -> bool:
    """Whether two generating sets span the same integer lattice."""
    return hermite_normal_form(gens_a) == hermite_normal_form(gens_b)


def integer_kernel(rows: list[list[int]], ncols: int) -> list[list[int]]:
    """Basis of {x in Z^ncols : A x = 0} for the matrix A given by `rows`."""
    if ncols == 0:
        return []
    if not rows:
        return [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]
    # Row-reduce the transpose with transform: zero rows of H flag kernel rows of U.
    at = [[rows[i][j] for i in range(len(rows))] for j in range(ncols)]
    H, U = _row_reduce_z(at)
    return [U[i] for i in range(ncols) if not any(H[i])]


def gf2_kernel(rows: list[list[int]], ncols: int) -> list[list[int]]:
    """Basis of the nullspace over GF2."""
    if ncols == 0:
        return []
    mat = [[x % 2 for x in r] for r in rows]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][col]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        for i in range(len(mat)):
            if i != r and mat[i][col]:
                mat[i] = [(a + b) % 2 for a, b in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    basis = []
    for f in (j for j in range(ncols) if j not in set(pivots)):
        vec = [0] * ncols
        vec[f] = 1
        for i, col in enumerate(pivots):
            vec[col] = mat[i][f]
        basis.append(vec)
    return basis
