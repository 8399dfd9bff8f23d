"""Tests pour adiabatic_mis.dynamics."""

import math

import numpy as np
import pytest
import scipy.linalg as la
from scipy.integrate import solve_ivp

from adiabatic_mis.dynamics import (
    default_steps,
    evolve,
    evolve_trajectory,
    initial_state,
    lanczos_expm_apply,
    mis_probability,
    Schedule,
    size_distribution,
    StateVector,
    write_trajectory_csv,
)
from adiabatic_mis.errors.exceptions import (
    KrylovBreakdownError,
    NormDriftError,
)
from adiabatic_mis.gauge import GaugeOperator
from adiabatic_mis.graphs import (
    complete,
    edgeless,
    gen_gnp,
    Graph,
    spider,
)
from adiabatic_mis.isbasis import build_basis, IsBasis


def _mean_size(psi: StateVector, basis_sizes: np.ndarray) -> float:
    return float(np.dot(psi.probabilities(), basis_sizes))


def _reference_evolution(basis: IsBasis, schedule: Schedule) -> np.ndarray:
    """Référence indépendante : Runge-Kutta d'ordre 8 à pas adaptatif."""
    operator = GaugeOperator(basis)

    def rhs(t: float, psi: np.ndarray) -> np.ndarray:
        matrix = operator.dense_at(
            schedule.theta_at(t), schedule.omega_phi, schedule.omega_theta
        )
        return 1j * (matrix @ psi)

    solution = solve_ivp(
        rhs,
        (0.0, schedule.total_time),
        initial_state(basis).amplitudes.astype(np.complex128),
        method="DOP853",
        rtol=1e-12,
        atol=1e-12,
    )
    return solution.y[:, -1]


class TestSchedule:
    """Tests pour Schedule et default_steps."""

    def test_for_graph(self) -> None:
        """n = 10, γ = 2 : T = 100, ω_θ·T = π."""
        schedule = Schedule.for_graph(10, gamma=2.0)
        assert schedule.total_time == 100.0
        assert schedule.omega_theta * schedule.total_time == pytest.approx(
            math.pi
        )
        assert schedule.gamma == 2.0
        assert schedule.steps == 5000

    @pytest.mark.parametrize(
        "total_time, n, expected",
        [(1.0, 1, 4000), (100.0, 10, 5000), (100.0, 20, 10000)],
    )
    def test_pas_par_defaut(
        self, total_time: float, n: int, expected: int
    ) -> None:
        """max(4000, ⌈50·T·max(1, n/10)⌉)."""
        assert default_steps(total_time, n) == expected

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"total_time": 0.0, "omega_phi": 1.0, "omega_theta": 1.0,
             "steps": 10},
            {"total_time": 1.0, "omega_phi": 0.0,
             "omega_theta": math.pi, "steps": 10},
            {"total_time": 1.0, "omega_phi": 1.0,
             "omega_theta": math.pi, "steps": 1},
            {"total_time": 2.0, "omega_phi": 1.0, "omega_theta": 1.0,
             "steps": 10},
            {"total_time": 2.0, "omega_phi": 1.0, "omega_theta": 0.0,
             "steps": 10, "held_theta": 4.0},
            {"total_time": 2.0, "omega_phi": 1.0, "omega_theta": 0.5,
             "steps": 10, "held_theta": 1.0},
        ],
    )
    def test_invariants(self, kwargs: dict[str, float]) -> None:
        """Les calendriers incohérents sont refusés."""
        with pytest.raises(ValueError):
            Schedule(**kwargs)  # type: ignore[arg-type]

    def test_theta_fixe(self) -> None:
        """θ reste constant à θ fixe."""
        schedule = Schedule.fixed_theta(1.2, total_time=5.0, steps=10)
        assert schedule.theta_at(0.0) == schedule.theta_at(5.0) == 1.2
        assert schedule.step_size == 0.5


class TestStateVector:
    """Tests pour StateVector et ses lectures."""

    def test_non_normalise_refuse(self) -> None:
        """Un vecteur de norme 2 est refusé."""
        with pytest.raises(ValueError, match="non normalisé"):
            StateVector(np.array([2.0, 0.0]))

    def test_amplitudes_en_lecture_seule(self) -> None:
        """Les amplitudes sont figées."""
        psi = StateVector.basis_state(3, 1)
        with pytest.raises(ValueError):
            psi.amplitudes[0] = 1.0

    def test_etat_initial(self) -> None:
        """Tout le poids sur l'ensemble vide."""
        basis = build_basis(spider(2))
        psi = initial_state(basis)
        assert len(psi) == len(basis)
        assert psi.probabilities()[0] == 1.0
        assert mis_probability(psi, basis) == 0.0
        distribution = size_distribution(psi, basis)
        assert distribution.tolist() == [1.0, 0.0, 0.0, 0.0]

    def test_distribution_par_taille(self) -> None:
        """Somme des probabilités par cardinal."""
        basis = build_basis(edgeless(2))
        psi = StateVector(np.full(4, 0.5, dtype=np.complex128))
        np.testing.assert_allclose(
            size_distribution(psi, basis), [0.25, 0.5, 0.25]
        )
        assert mis_probability(psi, basis) == pytest.approx(0.25)


class TestPropagator:
    """Tests pour lanczos_expm_apply."""

    @pytest.fixture
    def system(self) -> tuple[object, np.ndarray]:
        basis = build_basis(gen_gnp(10, 0.3, seed=11))
        matrix = GaugeOperator(basis).at(1.0, 1.0, 0.1)
        rng = np.random.default_rng(0)
        psi = rng.normal(size=len(basis)) + 1j * rng.normal(size=len(basis))
        return matrix, psi / np.linalg.norm(psi)

    def test_lanczos_egal_dense(
        self, system: tuple[object, np.ndarray]
    ) -> None:
        """Krylov et exponentielle dense coïncident."""
        matrix, psi = system
        expected = la.expm(0.05j * matrix.toarray()) @ psi  # type: ignore
        result = lanczos_expm_apply(matrix, psi, 0.05)  # type: ignore
        np.testing.assert_allclose(result, expected, atol=1e-10)

    def test_non_convergence(
        self, system: tuple[object, np.ndarray]
    ) -> None:
        """Sous-espace trop petit pour un grand pas."""
        matrix, psi = system
        with pytest.raises(KrylovBreakdownError):
            lanczos_expm_apply(matrix, psi, 10.0, krylov_dim=2)  # type: ignore

    def test_vecteur_nul(self, system: tuple[object, np.ndarray]) -> None:
        """exp(i·h·A)·0 = 0."""
        matrix, psi = system
        zero = np.zeros_like(psi)
        result = lanczos_expm_apply(matrix, zero, 0.1)  # type: ignore
        assert not result.any()


class TestEvolve:
    """Tests pour evolve et evolve_trajectory."""

    def test_sommet_isole(self) -> None:
        """edgeless(1), T = 200 : probabilité ≥ 0.999 sur {0}."""
        basis = build_basis(edgeless(1))
        final = evolve(basis, Schedule.sweep(200.0), initial_state(basis))
        assert final.probabilities()[1] >= 0.999
        assert abs(1.0 - final.norm) <= 1e-8

    @pytest.mark.parametrize(
        "graph",
        [edgeless(2), spider(2), complete(3)],
        ids=["sans-arete", "araignee", "triangle"],
    )
    def test_doublement_des_pas(self, graph: Graph) -> None:
        """Doubler le nombre de pas change N̄ de moins de 1e-6."""
        basis = build_basis(graph)
        coarse = evolve(
            basis, Schedule.sweep(4.0, steps=20000), initial_state(basis)
        )
        fine = evolve(
            basis, Schedule.sweep(4.0, steps=40000), initial_state(basis)
        )
        assert abs(
            _mean_size(coarse, basis.sizes) - _mean_size(fine, basis.sizes)
        ) < 1e-6

    def test_triangle_contre_integrateur_de_reference(self) -> None:
        """K3, T = 9 : N̄ à 1e-6 d'un Runge-Kutta indépendant."""
        basis = build_basis(complete(3))
        schedule = Schedule.for_graph(3, gamma=2.0)
        assert schedule.total_time == 9.0
        final = evolve(basis, schedule, initial_state(basis))
        reference = _reference_evolution(basis, schedule)
        expected = float(np.dot(np.abs(reference) ** 2, basis.sizes))
        assert _mean_size(final, basis.sizes) == pytest.approx(
            expected, abs=1e-6
        )

    def test_duree_nulle_theta_fixe(self) -> None:
        """T → 0 à θ fixe : la distribution initiale est conservée."""
        basis = build_basis(spider(2))
        schedule = Schedule.fixed_theta(1.0, total_time=1e-6, steps=10)
        final = evolve(basis, schedule, initial_state(basis))
        assert final.probabilities()[0] == pytest.approx(1.0, abs=1e-9)

    @pytest.mark.parametrize("graph", [edgeless(2), spider(2)])
    def test_duree_nulle_balayage(self, graph: Graph) -> None:
        """T → 0 en balayage : seule la rotation du repère ω_θ·T = π
        subsiste, ψ(T) → exp(i·π·Y)·ψ₀."""
        basis = build_basis(graph)
        operator = GaugeOperator(basis)
        rotation = operator.dense_at(0.0, 1.0, 1.0) - operator.dense_at(
            0.0, 1.0, 0.0
        )
        psi0 = initial_state(basis)
        limit = la.expm(1j * math.pi * rotation) @ psi0.amplitudes
        final = evolve(basis, Schedule.sweep(1e-5, steps=200), psi0)
        np.testing.assert_allclose(
            final.probabilities(), np.abs(limit) ** 2, atol=1e-3
        )

    def test_duree_nulle_sans_arete(self) -> None:
        """Sans arête, le balayage instantané retourne chaque spin : tout
        le poids passe sur l'ensemble plein."""
        basis = build_basis(edgeless(2))
        final = evolve(
            basis, Schedule.sweep(1e-5, steps=200), initial_state(basis)
        )
        assert final.probabilities()[-1] == pytest.approx(1.0, abs=1e-3)

    def test_theta_fixe_egal_exponentielle(self) -> None:
        """À θ fixe, A est constante : ψ(T) = exp(i·T·A)·ψ₀."""
        basis = build_basis(spider(1))
        schedule = Schedule.fixed_theta(math.pi / 2, total_time=3.0, steps=8)
        psi0 = initial_state(basis)
        matrix = GaugeOperator(basis).dense_at(math.pi / 2)
        expected = la.expm(3.0j * matrix) @ psi0.amplitudes
        final = evolve(basis, schedule, psi0)
        np.testing.assert_allclose(final.amplitudes, expected, atol=1e-10)

    def test_decalage_diagonal_sans_effet(self) -> None:
        """Une constante sur la diagonale ne change pas les probabilités."""
        basis = build_basis(spider(1))
        schedule = Schedule.sweep(5.0, steps=200)
        plain = evolve(basis, schedule, initial_state(basis))
        shifted = evolve(
            basis, schedule, initial_state(basis), diagonal_shift=3.0
        )
        np.testing.assert_allclose(
            plain.probabilities(), shifted.probabilities(), atol=1e-10
        )

    def test_dimension_incoherente(self) -> None:
        """Un état de mauvaise dimension est refusé."""
        basis = build_basis(spider(1))
        with pytest.raises(ValueError):
            evolve(basis, Schedule.sweep(1.0), StateVector.basis_state(2, 0))

    def test_derive_de_norme(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Une dérive de norme lève NormDriftError, sans renormaliser."""
        monkeypatch.setattr(
            "adiabatic_mis.dynamics.evolution.dense_expm_apply",
            lambda w, v, psi, h: 1.01 * psi,
        )
        basis = build_basis(edgeless(1))
        with pytest.raises(NormDriftError):
            evolve(basis, Schedule.sweep(1.0, steps=2), initial_state(basis))

    @pytest.mark.slow
    def test_chemin_krylov(self) -> None:
        """edgeless(10) (dim 1024, chemin Krylov) : N̄ = 10 × N̄ d'un
        spin isolé, les spins étant indépendants."""
        schedule = Schedule.sweep(2.0, steps=400)
        single = build_basis(edgeless(1))
        many = build_basis(edgeless(10))
        one = evolve(single, schedule, initial_state(single))
        ten = evolve(many, schedule, initial_state(many))
        assert _mean_size(ten, many.sizes) == pytest.approx(
            10.0 * _mean_size(one, single.sizes), abs=1e-8
        )

    @pytest.mark.slow
    def test_limite_adiabatique(self) -> None:
        """spider(3), MIS unique : P(MIS) croît avec T et dépasse 0.99
        à T = 1250 ; T = 10 confirmé par l'intégrateur de référence."""
        basis = build_basis(spider(3))
        probabilities = []
        for total_time in (10.0, 50.0, 250.0, 1250.0):
            schedule = Schedule.sweep(total_time, n=basis.n)
            final = evolve(basis, schedule, initial_state(basis))
            assert abs(1.0 - final.norm) <= 1e-8
            probabilities.append(mis_probability(final, basis))
        fine = Schedule.sweep(10.0, steps=40000)
        reference = np.abs(_reference_evolution(basis, fine)) ** 2
        np.testing.assert_allclose(
            evolve(basis, fine, initial_state(basis)).probabilities(),
            reference,
            atol=1e-6,
        )
        assert all(a < b for a, b in zip(probabilities, probabilities[1:]))
        assert probabilities[-1] > 0.99


class TestTrajectory:
    """Tests pour evolve_trajectory et write_trajectory_csv."""

    def test_extremites(self) -> None:
        """Premier instantané = ψ₀, dernier = evolve."""
        basis = build_basis(spider(1))
        schedule = Schedule.sweep(5.0, steps=300)
        snapshots = evolve_trajectory(
            basis, schedule, initial_state(basis), 4
        )
        assert len(snapshots) == 4
        assert snapshots[0].theta == 0.0
        assert snapshots[-1].theta == pytest.approx(math.pi)
        final = evolve(basis, schedule, initial_state(basis))
        np.testing.assert_allclose(
            snapshots[-1].state.amplitudes, final.amplitudes, atol=1e-14
        )
        for snapshot in snapshots:
            assert abs(1.0 - snapshot.state.norm) <= 1e-8

    def test_plus_d_instantanes_que_de_pas(self) -> None:
        """Instantanés confondus quand S − 1 > steps."""
        basis = build_basis(edgeless(1))
        snapshots = evolve_trajectory(
            basis, Schedule.sweep(1.0, steps=2), initial_state(basis), 5
        )
        assert len(snapshots) == 5

    def test_echantillons_insuffisants(self) -> None:
        """Moins de deux instantanés est refusé."""
        basis = build_basis(edgeless(1))
        with pytest.raises(ValueError):
            evolve_trajectory(
                basis, Schedule.sweep(1.0), initial_state(basis), 1
            )

    def test_csv(self) -> None:
        """En-tête et seuil 1e-9 sur les probabilités."""
        basis = build_basis(edgeless(1))
        snapshots = evolve_trajectory(
            basis, Schedule.sweep(1.0, steps=10), initial_state(basis), 2
        )
        lines = write_trajectory_csv(snapshots).splitlines()
        assert lines[0] == "theta,index,prob"
        assert lines[1] == "0.0,0,1.0"
        assert len(lines) == 1 + 1 + 2
