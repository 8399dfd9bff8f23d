"""Tests pour adiabatic_mis.analysis (métriques, recuits, ensembles)."""

import math

import numpy as np
import pytest

from adiabatic_mis.analysis import (
    anneal,
    ensemble_summary_dict,
    EnsembleResult,
    GeneratorSpec,
    mean_size,
    ratio,
    run_ensemble,
    run_record_dict,
    RUN_FIELDS,
    RunRecord,
    ScheduleSpec,
    sweep_n,
    sweep_series,
    write_runs_csv,
)
from adiabatic_mis.dynamics import Schedule, StateVector
from adiabatic_mis.graphs import (
    complete,
    edgeless,
    exact_mis,
    MisResult,
    split_seed,
)
from adiabatic_mis.isbasis import build_basis


def _record(**overrides: object) -> RunRecord:
    values: dict[str, object] = {
        "n": 3,
        "m": 0,
        "generator": "edgeless",
        "seed": 0,
        "alpha": 3,
        "mean_size": 2.0,
        "ratio": 2.0 / 3.0,
        "mis_probability": 0.5,
        "total_time": 9.0,
    }
    values.update(overrides)
    return RunRecord(**values)  # type: ignore[arg-type]


class TestMetrics:
    """Tests pour mean_size et ratio."""

    def test_triangle_uniforme(self) -> None:
        """K3, superposition uniforme : N̄ = 0.75, r = 0.75."""
        basis = build_basis(complete(3))
        psi = StateVector(np.full(4, 0.5, dtype=np.complex128))
        assert mean_size(psi, basis) == pytest.approx(0.75)
        assert ratio(psi, basis, exact_mis(complete(3))) == pytest.approx(
            0.75
        )

    def test_alpha_nul_refuse(self) -> None:
        """alpha < 1 est refusé."""
        basis = build_basis(complete(3))
        psi = StateVector.basis_state(4, 0)
        with pytest.raises(ValueError):
            ratio(psi, basis, MisResult(0, 0, 1))


class TestGeneratorSpec:
    """Tests pour GeneratorSpec."""

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"kind": "gnp"},
            {"kind": "gnm"},
            {"kind": "spider", "p": 0.5},
            {"kind": "gnp", "p": 0.5, "m": 3},
        ],
    )
    def test_parametres_incoherents(self, kwargs: dict[str, object]) -> None:
        """Paramètre manquant ou superflu."""
        with pytest.raises(ValueError):
            GeneratorSpec(**kwargs)  # type: ignore[arg-type]

    def test_libelles(self) -> None:
        """Libellés de la colonne generator."""
        assert GeneratorSpec("gnp", p=0.5).describe() == "gnp(p=0.5)"
        assert GeneratorSpec("gnm", m=7).describe() == "gnm(m=7)"
        assert GeneratorSpec("gnm-equal-n").describe() == "gnm-equal-n"

    def test_construction(self) -> None:
        """Taille et aléa de chaque famille."""
        assert GeneratorSpec("spider").build(2, 0).n == 5
        assert GeneratorSpec("gnm-equal-n").build(9, 4).m == 9
        assert GeneratorSpec("complete").build(4, 0).m == 6
        assert GeneratorSpec("gnp", p=0.3).is_random
        assert not GeneratorSpec("edgeless").is_random

    def test_graine_reproductible(self) -> None:
        """Même graine, même graphe."""
        spec = GeneratorSpec("gnp", p=0.4)
        assert spec.build(12, 99) == spec.build(12, 99)


class TestScheduleSpec:
    """Tests pour ScheduleSpec."""

    def test_gamma(self) -> None:
        """T = n^γ par défaut."""
        assert ScheduleSpec(gamma=1.5).schedule_for(4).total_time == 8.0

    def test_duree_imposee(self) -> None:
        """Une durée imposée ne dépend pas de n."""
        spec = ScheduleSpec(total_time=7.0, steps=100)
        schedule = spec.schedule_for(30)
        assert schedule.total_time == 7.0
        assert schedule.steps == 100


class TestRunRecord:
    """Tests pour les bornes de RunRecord."""

    def test_taille_hors_bornes(self) -> None:
        """N̄ > α est refusé."""
        with pytest.raises(ValueError):
            _record(mean_size=3.5, ratio=1.0)

    def test_ratio_hors_bornes(self) -> None:
        """r > 1 est refusé."""
        with pytest.raises(ValueError):
            _record(ratio=1.2)

    def test_tolerance(self) -> None:
        """Un dépassement de 1e-12 est toléré."""
        assert _record(mean_size=3.0 + 1e-12, ratio=1.0 + 1e-12).alpha == 3

    def test_derive_de_norme_admise(self) -> None:
        """‖ψ‖² = 1 + 2e-8 reste dans la tolérance de evolve."""
        record = _record(
            alpha=5, mean_size=5.0 * (1.0 + 2e-8), ratio=1.0 + 2e-8
        )
        assert record.ratio > 1.0

    def test_depassement_au_dela_de_la_derive(self) -> None:
        """Un écart de 1e-6 n'est pas une dérive de norme."""
        with pytest.raises(ValueError):
            _record(alpha=5, mean_size=5.0 + 1e-6, ratio=1.0)
        with pytest.raises(ValueError):
            _record(ratio=1.0 + 1e-6)


class TestAnneal:
    """Tests pour anneal."""

    def test_sans_arete(self) -> None:
        """edgeless(3), T = 200 : r ≥ 0.999."""
        outcome = anneal(
            edgeless(3), Schedule.sweep(200.0), generator="edgeless"
        )
        record = outcome.record
        assert record.alpha == 3
        assert record.ratio >= 0.999
        assert record.mis_probability >= 0.99
        assert record.runtime_ms is None
        assert record.total_time == 200.0
        assert len(outcome.basis) == 8

    def test_duree_enregistree(self) -> None:
        """record_runtime renseigne runtime_ms."""
        outcome = anneal(
            complete(3), Schedule.sweep(2.0, steps=20), record_runtime=True
        )
        assert outcome.record.runtime_ms is not None
        assert outcome.record.runtime_ms >= 0.0


class TestEnsemble:
    """Tests pour run_ensemble et sweep_n."""

    def test_sans_arete(self) -> None:
        """Membres identiques : r̄ ≥ 0.999, variance nulle."""
        result = run_ensemble(
            GeneratorSpec("edgeless"),
            2,
            3,
            ScheduleSpec(total_time=200.0),
            master_seed=5,
            parallelism=1,
        )
        assert result.count_used == 3
        assert result.skip_count == 0
        assert result.r_bar is not None and result.r_bar >= 0.999
        assert result.r_variance == pytest.approx(0.0, abs=1e-20)
        assert [r.seed for r in result.records] == [
            split_seed(5, i) for i in range(3)
        ]

    def test_un_membre(self) -> None:
        """Un seul membre : variance exactement nulle."""
        result = run_ensemble(
            GeneratorSpec("complete"),
            3,
            1,
            ScheduleSpec(total_time=3.0, steps=50),
            master_seed=0,
            parallelism=1,
        )
        assert result.r_variance == 0.0
        assert result.standard_error == 0.0
        assert result.alpha_mean == 1.0

    def test_independant_du_parallelisme(self) -> None:
        """Même graine maîtresse : résultats identiques en 1 ou 2
        processus."""
        args = (
            GeneratorSpec("gnp", p=0.5),
            6,
            4,
            ScheduleSpec(total_time=5.0, steps=200),
        )
        serial = run_ensemble(*args, master_seed=17, parallelism=1)
        pooled = run_ensemble(*args, master_seed=17, parallelism=2)
        assert serial.records == pooled.records
        assert serial.r_bar == pooled.r_bar
        assert write_runs_csv(serial.records) == write_runs_csv(
            pooled.records
        )

    def test_membres_ecartes(self) -> None:
        """Plafond de base trop bas : tous les membres sont écartés."""
        result = run_ensemble(
            GeneratorSpec("gnm-equal-n"),
            6,
            3,
            ScheduleSpec(total_time=1.0, steps=10),
            master_seed=1,
            parallelism=1,
            basis_cap=5,
        )
        assert result.skip_count == 3
        assert result.count_used == 0
        assert result.r_bar is None
        assert result.standard_error is None
        summary = ensemble_summary_dict(result)
        assert summary["skip_count"] == 3
        assert summary["r_bar"] is None
        assert [s["index"] for s in summary["skipped"]] == [0, 1, 2]

    def test_effectif_invalide(self) -> None:
        """count < 1 est refusé."""
        with pytest.raises(ValueError):
            run_ensemble(
                GeneratorSpec("edgeless"), 2, 0, ScheduleSpec(), 0
            )

    def test_balayage_en_n(self) -> None:
        """sweep_n produit un point (n, r̄) par taille."""
        results = sweep_n(
            GeneratorSpec("edgeless"),
            [1, 2],
            2,
            ScheduleSpec(total_time=100.0),
            master_seed=3,
            parallelism=1,
        )
        series = sweep_series(results)
        assert [n for n, _ in series] == [1, 2]
        assert all(r >= 0.99 for _, r in series)

    def test_estimation_alpha(self) -> None:
        """Estimation dense pour G(n, p), creuse sinon."""
        result = run_ensemble(
            GeneratorSpec("gnp", p=0.5),
            8,
            1,
            ScheduleSpec(total_time=1.0, steps=10),
            master_seed=2,
            parallelism=1,
        )
        assert result.alpha_estimate == pytest.approx(2.0 * math.log2(8))
        flat = run_ensemble(
            GeneratorSpec("edgeless"),
            4,
            1,
            ScheduleSpec(total_time=1.0, steps=10),
            master_seed=2,
            parallelism=1,
        )
        assert flat.mean_degree == 0.0
        assert flat.alpha_estimate is None


def _r_bars(results: list[EnsembleResult]) -> list[float]:
    r_bars = [result.r_bar for result in results]
    assert all(r is not None for r in r_bars)
    return [float(r) for r in r_bars if r is not None]


@pytest.mark.slow
class TestEnsembleTrends:
    """Tendances de r̄ sur des ensembles de 200 graphes."""

    N_VALUES = [6, 8, 10, 12, 14]

    def _series(
        self, generator: GeneratorSpec, gamma: float
    ) -> list[EnsembleResult]:
        return sweep_n(
            generator,
            self.N_VALUES,
            200,
            ScheduleSpec(gamma=gamma),
            master_seed=2024,
        )

    @pytest.mark.parametrize(
        "generator",
        [GeneratorSpec("gnp", p=0.5), GeneratorSpec("gnm-equal-n")],
        ids=["gnp", "gnm-equal-n"],
    )
    def test_t_egal_n_carre(self, generator: GeneratorSpec) -> None:
        """T = n² : r̄ croît avec n, variance de r ≤ 1e-3."""
        results = self._series(generator, 2.0)
        r_bars = _r_bars(results)
        assert all(a <= b for a, b in zip(r_bars, r_bars[1:]))
        assert r_bars[-1] - r_bars[0] > 0.0
        for result in results:
            assert result.skip_count == 0
            assert result.r_variance is not None
            assert result.r_variance <= 1e-3

    def test_t_egal_n(self) -> None:
        """T = n : r̄ décroît avec n et reste sous r̄ à T = n²."""
        generator = GeneratorSpec("gnp", p=0.5)
        r_bars = _r_bars(self._series(generator, 1.0))
        assert all(a >= b for a, b in zip(r_bars, r_bars[1:]))
        quadratic = run_ensemble(
            generator,
            14,
            200,
            ScheduleSpec(gamma=2.0),
            master_seed=2024,
        )
        assert r_bars[-1] < _r_bars([quadratic])[0]


class TestReport:
    """Tests pour les exports CSV et JSON."""

    def test_csv(self) -> None:
        """runtime_ms vide quand la durée n'est pas mesurée."""
        lines = write_runs_csv([_record()]).splitlines()
        assert lines[0] == ",".join(RUN_FIELDS)
        assert lines[1] == (
            f"3,0,edgeless,0,3,2.0,{2.0 / 3.0!r},0.5,"
        )

    def test_dict(self) -> None:
        """La représentation JSON reprend tous les champs."""
        payload = run_record_dict(_record(runtime_ms=1.5))
        assert payload["runtime_ms"] == 1.5
        assert payload["total_time"] == 9.0
