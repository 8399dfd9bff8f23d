"""Application de exp(i·h·A) à un vecteur.

Deux chemins : diagonalisation dense (scipy.linalg.eigh) pour les
petites dimensions, projection de Lanczos avec réorthogonalisation
complète au-delà. L'exponentielle de la matrice tridiagonale est
obtenue par ``eigh_tridiagonal``.
"""

import numpy as np
import numpy.typing as npt
import scipy.linalg as la
import scipy.sparse as sp

from adiabatic_mis.errors.exceptions import KrylovBreakdownError

DENSE_PROPAGATOR_MAX = 512
DEFAULT_KRYLOV_DIM = 40
KRYLOV_TOLERANCE = 1e-13

ComplexVector = npt.NDArray[np.complex128]


def dense_expm_apply(
    eigenvalues: npt.NDArray[np.float64],
    eigenvectors: npt.NDArray[np.complex128],
    psi: ComplexVector,
    h: float,
) -> ComplexVector:
    """Applique exp(i·h·A) connaissant A = V·diag(w)·V†."""
    coefficients = eigenvectors.conj().T @ psi
    return eigenvectors @ (np.exp(1j * h * eigenvalues) * coefficients)


def _tridiagonal_expm_first_column(
    alpha: npt.NDArray[np.float64], beta: npt.NDArray[np.float64], h: float
) -> ComplexVector:
    """Première colonne de exp(i·h·T) pour T tridiagonale réelle."""
    if alpha.size == 1:
        return np.array([np.exp(1j * h * alpha[0])], dtype=np.complex128)
    w, s = la.eigh_tridiagonal(alpha, beta)
    return s @ (np.exp(1j * h * w) * s[0, :])


def lanczos_expm_apply(
    matrix: sp.csr_matrix,
    psi: ComplexVector,
    h: float,
    krylov_dim: int = DEFAULT_KRYLOV_DIM,
    tolerance: float = KRYLOV_TOLERANCE,
) -> ComplexVector:
    """Applique exp(i·h·A) par projection de Krylov (Lanczos).

    Chaque nouveau vecteur est réorthogonalisé contre toute la base.
    Une rupture « heureuse » (β ≈ 0) signifie que le sous-espace est
    invariant et le résultat exact.

    Args:
        matrix: Matrice hermitienne creuse A.
        psi: Vecteur d'entrée.
        h: Pas de temps.
        krylov_dim: Dimension maximale du sous-espace.
        tolerance: Seuil de convergence de l'erreur a posteriori.

    Returns:
        Vecteur exp(i·h·A)·psi.

    Raises:
        KrylovBreakdownError: Si la projection ne converge pas dans
            ``krylov_dim`` itérations.
    """
    dim = psi.shape[0]
    scale = float(np.linalg.norm(psi))
    if scale == 0.0:
        return psi.copy()
    max_dim = min(krylov_dim, dim)
    basis = np.zeros((max_dim, dim), dtype=np.complex128)
    alpha = np.zeros(max_dim)
    beta = np.zeros(max_dim)
    basis[0] = psi / scale
    matrix_norm = float(abs(matrix).sum(axis=1).max())
    breakdown = np.finfo(np.float64).eps * max(1.0, matrix_norm)

    for k in range(max_dim):
        w = matrix @ basis[k]
        alpha[k] = float(np.real(np.vdot(basis[k], w)))
        w = w - alpha[k] * basis[k]
        if k > 0:
            w = w - beta[k - 1] * basis[k - 1]
        # Réorthogonalisation complète (deux passes de Gram-Schmidt).
        for _ in range(2):
            w = w - basis[: k + 1].T @ (basis[: k + 1].conj() @ w)
        beta[k] = float(np.linalg.norm(w))

        small = _tridiagonal_expm_first_column(
            alpha[: k + 1], beta[:k], h
        )
        if beta[k] <= breakdown:
            return scale * (basis[: k + 1].T @ small)
        error = scale * beta[k] * abs(small[-1])
        if error < tolerance or k + 1 == dim:
            return scale * (basis[: k + 1].T @ small)
        if k + 1 < max_dim:
            basis[k + 1] = w / beta[k]

    raise KrylovBreakdownError(
        f"projection de Krylov non convergée en {max_dim} itérations"
    )
