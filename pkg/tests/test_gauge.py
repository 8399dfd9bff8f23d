"""Tests pour adiabatic_mis.gauge (H₀, matrice de jauge, Berry)."""

import math

import numpy as np
import pytest

from adiabatic_mis.errors.exceptions import ValidationScaleError
from adiabatic_mis.gauge import (
    assemble_gauge,
    berry_connection_fd,
    berry_connection_fd_dense,
    edgeless_pauli_form,
    edgeless_reference_gap,
    GaugeOperator,
    GaugeParams,
    h0_energy,
    h0_spectrum,
    rotation_matrix,
    SparseHermitian,
    spin_states,
)
from adiabatic_mis.graphs import (
    complete,
    edgeless,
    gen_gnp,
    Graph,
    spider,
)
from adiabatic_mis.isbasis import build_basis, mis_indices


class TestH0:
    """Tests pour h0_energy et h0_spectrum."""

    def test_tous_spins_bas(self) -> None:
        """Configuration vide : −mΔ."""
        graph = gen_gnp(8, 0.5, seed=1)
        assert h0_energy(0, graph, delta=2.0) == -2.0 * graph.m

    def test_arete_deux_spins_hauts(self) -> None:
        """Une arête dont les deux extrémités sont hautes vaut +3Δ."""
        assert h0_energy(0b11, Graph(2, ((0, 1),))) == 3.0

    def test_triangle_une_violation(self) -> None:
        """K3, {0, 1} hauts : −3 + 4 = 1."""
        assert h0_energy(0b011, complete(3)) == 1.0

    def test_spectre_egal_energies(self) -> None:
        """Le spectre vectorisé égale l'évaluation configuration par
        configuration."""
        graph = spider(2)
        spectrum = h0_spectrum(graph, delta=1.5)
        for config in range(1 << graph.n):
            assert spectrum[config] == pytest.approx(
                h0_energy(config, graph, 1.5)
            )

    def test_fondamentaux_sont_les_ensembles_independants(self) -> None:
        """Énergie −mΔ exactement sur les ensembles indépendants."""
        graph = gen_gnp(9, 0.4, seed=3)
        spectrum = h0_spectrum(graph)
        ground = np.flatnonzero(spectrum == -graph.m).tolist()
        assert ground == list(build_basis(graph).masks())
        excited = spectrum[spectrum > -graph.m]
        assert excited.min() == pytest.approx(-graph.m + 4.0)

    def test_spectre_limite(self) -> None:
        """n > 20 lève ValidationScaleError."""
        with pytest.raises(ValidationScaleError):
            h0_spectrum(edgeless(21))


class TestGaugeParams:
    """Tests pour GaugeParams."""

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"theta": -0.1},
            {"theta": 3.2},
            {"theta": 1.0, "omega_phi": 0.0},
            {"theta": 1.0, "omega_theta": -1.0},
        ],
    )
    def test_bornes(self, kwargs: dict[str, float]) -> None:
        """Les paramètres hors domaine sont refusés."""
        with pytest.raises(ValueError):
            GaugeParams(**kwargs)


class TestSparseHermitian:
    """Tests pour SparseHermitian."""

    def test_triangle_superieur_refuse(self) -> None:
        """rows ≤ cols est refusé."""
        with pytest.raises(ValueError):
            SparseHermitian(
                2,
                np.zeros(2),
                np.array([0]),
                np.array([1]),
                np.array([1.0 + 0j]),
            )

    def test_csr_egal_dense_et_hermitien(self) -> None:
        """to_csr et to_dense coïncident et sont hermitiennes."""
        basis = build_basis(spider(2))
        matrix = assemble_gauge(basis, GaugeParams(1.1, 1.0, 0.3))
        dense = matrix.to_dense()
        np.testing.assert_allclose(matrix.to_csr().toarray(), dense)
        np.testing.assert_allclose(dense, dense.conj().T)


class TestAssembleGauge:
    """Tests pour assemble_gauge."""

    def test_theta_nul(self) -> None:
        """θ = 0 : diag = −(n − N_j)·ω_φ, minimum sur le vide."""
        basis = build_basis(spider(2))
        matrix = assemble_gauge(basis, GaugeParams(0.0, 2.0))
        expected = -(basis.n - basis.sizes) * 2.0
        np.testing.assert_allclose(matrix.diagonal, expected, atol=1e-12)
        assert int(np.argmin(matrix.diagonal)) == 0
        np.testing.assert_allclose(matrix.values, 0.0, atol=1e-12)

    def test_theta_pi(self) -> None:
        """θ = π : diag = −N_j·ω_φ, minimum sur le MIS."""
        basis = build_basis(spider(3))
        matrix = assemble_gauge(basis, GaugeParams(math.pi, 1.0))
        np.testing.assert_allclose(
            matrix.diagonal, -basis.sizes.astype(float), atol=1e-12
        )
        assert int(np.argmin(matrix.diagonal)) in mis_indices(basis)

    def test_theta_demi_pi(self) -> None:
        """θ = π/2, ω_θ = 0 : chaque saut vaut 1/2."""
        basis = build_basis(gen_gnp(8, 0.3, seed=2))
        matrix = assemble_gauge(basis, GaugeParams(math.pi / 2))
        np.testing.assert_allclose(np.abs(matrix.values), 0.5)

    def test_support_egal_aux_sauts(self) -> None:
        """Les entrées non diagonales sont exactement les sauts,
        rangée = état le plus grand."""
        basis = build_basis(complete(3))
        matrix = assemble_gauge(basis, GaugeParams(1.0, 1.0, 0.2))
        assert [(r, c) for r, c, _ in matrix.off_diagonal] == [
            (hi, lo) for lo, hi in basis.hops
        ]
        assert matrix.values[0] == pytest.approx(
            complex(math.sin(1.0) / 2, 0.1)
        )


class TestGaugeOperator:
    """Tests pour GaugeOperator."""

    @pytest.mark.parametrize(
        "theta, omega_phi, omega_theta",
        [(0.0, 1.0, 0.0), (0.7, 1.3, 0.2), (math.pi, 2.0, 0.5)],
    )
    def test_egal_assemble_gauge(
        self, theta: float, omega_phi: float, omega_theta: float
    ) -> None:
        """La forme décomposée égale l'assemblage direct."""
        basis = build_basis(gen_gnp(9, 0.35, seed=6))
        operator = GaugeOperator(basis)
        expected = assemble_gauge(
            basis, GaugeParams(theta, omega_phi, omega_theta)
        ).to_dense()
        np.testing.assert_allclose(
            operator.dense_at(theta, omega_phi, omega_theta),
            expected,
            atol=1e-12,
        )

    @pytest.mark.parametrize("scale", [0.5, 3.0])
    def test_homogeneite(self, scale: float) -> None:
        """A(θ, c·ω_φ, c·ω_θ) = c·A(θ, ω_φ, ω_θ)."""
        basis = build_basis(gen_gnp(8, 0.4, seed=2))
        base = assemble_gauge(basis, GaugeParams(1.1, 0.8, 0.3)).to_dense()
        scaled = assemble_gauge(
            basis, GaugeParams(1.1, scale * 0.8, scale * 0.3)
        ).to_dense()
        np.testing.assert_allclose(scaled, scale * base, atol=1e-12)

    def test_decalage_diagonal(self) -> None:
        """diagonal_shift ajoute une constante à la diagonale."""
        basis = build_basis(complete(3))
        shifted = GaugeOperator(basis, diagonal_shift=5.0).dense_at(0.4)
        plain = GaugeOperator(basis).dense_at(0.4)
        np.testing.assert_allclose(shifted - plain, 5.0 * np.eye(4))


class TestEdgeless:
    """Tests pour edgeless_pauli_form et edgeless_reference_gap."""

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_pauli_egal_assemble(self, n: int) -> None:
        """La forme en spins libres égale A(θ) sur edgeless(n)."""
        params = GaugeParams(0.9, 1.2, 0.4)
        expected = assemble_gauge(build_basis(edgeless(n)), params)
        np.testing.assert_allclose(
            edgeless_pauli_form(n, params), expected.to_dense(), atol=1e-12
        )

    @pytest.mark.parametrize(
        "omega_phi, omega_theta, gap",
        [(1.0, 0.0, 1.0), (2.0, 0.0, 2.0), (1.0, 1.0, math.sqrt(2.0))],
    )
    def test_ecart_de_reference(
        self, omega_phi: float, omega_theta: float, gap: float
    ) -> None:
        """Écart analytique, confirmé par diagonalisation exacte."""
        params = GaugeParams(1.3, omega_phi, omega_theta)
        assert edgeless_reference_gap(3, params) == pytest.approx(gap)
        levels = np.linalg.eigvalsh(edgeless_pauli_form(3, params))
        assert levels[1] - levels[0] == pytest.approx(gap, abs=1e-8)

    def test_ecart_sans_vitesse_theta(self) -> None:
        """drop_theta_rate ignore ω_θ."""
        params = GaugeParams(0.5, 1.5, 3.0)
        assert edgeless_reference_gap(2, params, drop_theta_rate=True) == 1.5


class TestBerry:
    """Tests pour la connexion de Berry par différences finies."""

    def test_rotation_involutive(self) -> None:
        """V(θ, φ)² = I."""
        rotation = rotation_matrix(0.8, 2.1)
        np.testing.assert_allclose(rotation @ rotation, np.eye(2), atol=1e-14)

    def test_etats_orthonormes(self) -> None:
        """|d_r⟩ et |u_r⟩ forment une base orthonormée."""
        states = spin_states(1.2, 0.3)
        np.testing.assert_allclose(
            states.conj().T @ states, np.eye(2), atol=1e-14
        )

    def test_un_sommet(self) -> None:
        """Un sommet, θ = π/3 : saut sin(π/3)/2 + 0.005i."""
        basis = build_basis(edgeless(1))
        matrix = berry_connection_fd(basis, math.pi / 3, 0.7, 0.01, 1.0)
        value = matrix.values[0]
        assert abs(value - complex(math.sin(math.pi / 3) / 2, 0.005)) < 1e-6

    @pytest.mark.parametrize("seed", range(3))
    def test_accord_avec_assemble_gauge(self, seed: int) -> None:
        """Diagonale et sauts égalent A(θ) à 1e-6 près."""
        basis = build_basis(gen_gnp(7, 0.4, seed=seed))
        theta, omega_phi, omega_theta = 0.6 + 0.5 * seed, 1.0, 0.05
        fd = berry_connection_fd(basis, theta, 1.9, omega_theta, omega_phi)
        exact = assemble_gauge(
            basis, GaugeParams(theta, omega_phi, omega_theta)
        )
        np.testing.assert_allclose(fd.diagonal, exact.diagonal, atol=1e-6)
        np.testing.assert_allclose(fd.values, exact.values, atol=1e-6)

    def test_couplages_lointains_negligeables(self) -> None:
        """Les entrées hors diagonale et hors sauts sont < 1e-8."""
        basis = build_basis(spider(2))
        dense = berry_connection_fd_dense(basis, 1.0, 0.4, 0.02, 1.0)
        support = np.eye(len(basis), dtype=bool)
        support[basis.hop_hi, basis.hop_lo] = True
        support[basis.hop_lo, basis.hop_hi] = True
        assert np.max(np.abs(dense[~support])) < 1e-8

    def test_sans_vitesse_theta_sauts_reels(self) -> None:
        """θ̇ = 0 : les sauts sont réels."""
        basis = build_basis(complete(3))
        matrix = berry_connection_fd(basis, 0.9, 0.2, 0.0, 1.0)
        np.testing.assert_allclose(matrix.values.imag, 0.0, atol=1e-9)

    def test_echelle_limitee(self) -> None:
        """n > 12 lève ValidationScaleError."""
        with pytest.raises(ValidationScaleError):
            berry_connection_fd(build_basis(complete(13)), 1.0, 0.0, 0.0, 1.0)
