"""Connexion de Berry par différences finies.

Les états |E_α(θ, φ)⟩ sont des produits d'états à un spin : |u_r⟩
pour un sommet de l'ensemble, |d_r⟩ sinon, lus dans les colonnes de la
rotation V(θ, φ) (l'état |d_r⟩ reçoit la phase e^{iφ}). L'élément
i⟨E_α|∂_t|E_β⟩ est estimé par différences centrées en t le long du
chemin θ(t) = θ + θ̇·t, φ(t) = φ + φ̇·t. Le recouvrement de deux
produits tensoriels est le produit des recouvrements à un spin, ce qui
évite de matérialiser les vecteurs de dimension 2^n.
"""

import math

import numpy as np
import numpy.typing as npt

from adiabatic_mis.errors.exceptions import ValidationScaleError
from adiabatic_mis.gauge.models import SparseHermitian
from adiabatic_mis.isbasis.basis import IsBasis

MAX_FD_DIMENSION = 4096
MAX_FD_VERTICES = 12


def rotation_matrix(theta: float, phi: float) -> npt.NDArray[np.complex128]:
    """Rotation V(θ, φ) d'un spin vers la direction r(θ, φ).

    V est hermitienne et involutive (V = V⁻¹).
    """
    c = math.cos(theta / 2.0)
    s = math.sin(theta / 2.0)
    return np.array(
        [
            [c, np.exp(-1j * phi) * s],
            [np.exp(1j * phi) * s, -c],
        ],
        dtype=np.complex128,
    )


def spin_states(theta: float, phi: float) -> npt.NDArray[np.complex128]:
    """États propres tournés, colonne 0 = |d_r⟩, colonne 1 = |u_r⟩.

    L'indice de colonne suit le bit « sommet dans l'ensemble ».
    """
    rotation = rotation_matrix(theta, phi)
    up = rotation[:, 0]
    down = np.exp(1j * phi) * rotation[:, 1]
    return np.column_stack([down, up])


def _overlaps(
    basis: IsBasis,
    bra: npt.NDArray[np.complex128],
    ket: npt.NDArray[np.complex128],
) -> npt.NDArray[np.complex128]:
    """Matrice ⟨E_α(bra)|E_β(ket)⟩ sur la base."""
    single = bra.conj().T @ ket
    dim = len(basis)
    result = np.ones((dim, dim), dtype=np.complex128)
    for v in range(basis.n):
        bits = ((basis.states >> np.uint64(v)) & np.uint64(1)).astype(
            np.int64
        )
        result *= single[bits[:, None], bits[None, :]]
    return result


def berry_connection_fd_dense(
    basis: IsBasis,
    theta: float,
    phi: float,
    d_theta_dt: float,
    d_phi_dt: float,
    fd_step: float = 1e-5,
) -> npt.NDArray[np.complex128]:
    """Matrice dense i⟨E_α|∂_t|E_β⟩ par différences centrées.

    Args:
        basis: Base des ensembles indépendants (n ≤ 12, dim ≤ 4096).
        theta: Angle θ au point d'évaluation.
        phi: Angle φ au point d'évaluation.
        d_theta_dt: Vitesse θ̇.
        d_phi_dt: Vitesse φ̇.
        fd_step: Pas h de la différence centrée.

    Returns:
        Matrice dim × dim, y compris les couplages à distance ≥ 2.

    Raises:
        ValidationScaleError: Si l'instance dépasse l'échelle de
            validation dense.
    """
    if len(basis) > MAX_FD_DIMENSION or basis.n > MAX_FD_VERTICES:
        raise ValidationScaleError(
            f"validation dense limitée à dim ≤ {MAX_FD_DIMENSION} et "
            f"n ≤ {MAX_FD_VERTICES} (dim={len(basis)}, n={basis.n})"
        )
    here = spin_states(theta, phi)
    forward = spin_states(
        theta + d_theta_dt * fd_step, phi + d_phi_dt * fd_step
    )
    backward = spin_states(
        theta - d_theta_dt * fd_step, phi - d_phi_dt * fd_step
    )
    derivative = (
        _overlaps(basis, here, forward) - _overlaps(basis, here, backward)
    ) / (2.0 * fd_step)
    return 1j * derivative


def berry_connection_fd(
    basis: IsBasis,
    theta: float,
    phi: float,
    d_theta_dt: float,
    d_phi_dt: float,
    fd_step: float = 1e-5,
) -> SparseHermitian:
    """Connexion de Berry restreinte à la diagonale et aux sauts.

    Voir ``berry_connection_fd_dense`` pour les paramètres ; la partie
    imaginaire résiduelle de la diagonale (erreur de troncature) est
    abandonnée.
    """
    dense = berry_connection_fd_dense(
        basis, theta, phi, d_theta_dt, d_phi_dt, fd_step
    )
    return SparseHermitian(
        dimension=len(basis),
        diagonal=np.real(np.diag(dense)).copy(),
        rows=basis.hop_hi.copy(),
        cols=basis.hop_lo.copy(),
        values=dense[basis.hop_hi, basis.hop_lo].copy(),
    )
