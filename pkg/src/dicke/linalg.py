"""Dense linear algebra for tiny real symmetric matrices (dim <= 9).

A cyclic Jacobi rotation sweep is all that is needed at these sizes and
keeps the package free of numerical dependencies.  Convergence is declared
when the off-diagonal Frobenius norm drops below 1e-13, with a hard cap of
50 sweeps.
"""

from __future__ import annotations

from math import sqrt

Matrix = list[list[float]]

OFF_DIAGONAL_TOLERANCE = 1e-13
MAX_SWEEPS = 50
SYMMETRY_TOLERANCE = 1e-12


def off_diagonal_norm(a: Matrix) -> float:
    return sqrt(
        sum(
            a[i][j] * a[i][j]
            for i in range(len(a))
            for j in range(len(a))
            if i != j
        )
    )


def _check_symmetric(a: Matrix) -> None:
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix is not square")
    for i in range(n):
        for j in range(i + 1, n):
            if abs(a[i][j] - a[j][i]) > SYMMETRY_TOLERANCE:
                raise ValueError(
                    f"matrix is not symmetric: |a[{i}][{j}] - a[{j}][{i}]| = "
                    f"{abs(a[i][j] - a[j][i]):.3e}"
                )


def jacobi_eigh(a: Matrix) -> tuple[list[float], Matrix]:
    """Eigendecomposition of a real symmetric matrix.

    Returns (eigenvalues ascending, eigenvector matrix V with V[:][k] the
    column for eigenvalue k), so A = V diag(w) V^T.
    """
    _check_symmetric(a)
    n = len(a)
    a = [row[:] for row in a]
    v = [[1.0 if i == j else 0.0 for j in range(n)] for i in range(n)]
    for _ in range(MAX_SWEEPS):
        if off_diagonal_norm(a) < OFF_DIAGONAL_TOLERANCE:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                if apq == 0.0:
                    continue
                theta = (a[q][q] - a[p][p]) / (2.0 * apq)
                t = (1.0 if theta >= 0.0 else -1.0) / (
                    abs(theta) + sqrt(theta * theta + 1.0)
                )
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    akp, akq = a[k][p], a[k][q]
                    a[k][p] = c * akp - s * akq
                    a[k][q] = s * akp + c * akq
                for k in range(n):
                    apk, aqk = a[p][k], a[q][k]
                    a[p][k] = c * apk - s * aqk
                    a[q][k] = s * apk + c * aqk
                for k in range(n):
                    vkp, vkq = v[k][p], v[k][q]
                    v[k][p] = c * vkp - s * vkq
                    v[k][q] = s * vkp + c * vkq
    order = sorted(range(n), key=lambda i: a[i][i])
    values = [a[i][i] for i in order]
    vectors = [[v[i][k] for k in order] for i in range(n)]
    return values, vectors


def symmetric_eigenvalues(a: Matrix) -> list[float]:
    """All eigenvalues of a real symmetric matrix, ascending."""
    values, _ = jacobi_eigh(a)
    return values


def reconstruction_residual(a: Matrix, values: list[float], vectors: Matrix) -> float:
    """Max-norm of V diag(w) V^T - A, for solver self-checks."""
    n = len(a)
    worst = 0.0
    for i in range(n):
        for j in range(n):
            rebuilt = sum(vectors[i][k] * values[k] * vectors[j][k] for k in range(n))
            worst = max(worst, abs(rebuilt - a[i][j]))
    return worst
