"""Sous-commandes : gen, validate, gap-scan, anneal, ensemble.

Chaque commande écrit ses fichiers dans ``--out`` avec le préfixe de
son nom, puis un manifeste ``<commande>_manifest.json`` (versions,
graines, écho complet de la configuration, SHA-256 de chaque fichier).
"""

import argparse
import math
from typing import Any

from adiabatic_mis.analysis.ensemble import (
    EnsembleResult,
    anneal,
    run_ensemble,
    sweep_n,
)
from adiabatic_mis.analysis.report import (
    ensemble_summary_dict,
    run_record_dict,
    sweep_series,
    write_runs_csv,
)
from adiabatic_mis.cli.arguments import (
    add_graph_arguments,
    add_schedule_arguments,
    seed_value,
)
from adiabatic_mis.cli.base import CliCommand
from adiabatic_mis.config.schema import RunConfig
from adiabatic_mis.dynamics.evolution import (
    evolve_trajectory,
    write_trajectory_csv,
)
from adiabatic_mis.dynamics.schedule import Schedule
from adiabatic_mis.dynamics.state import initial_state, size_distribution
from adiabatic_mis.graphs.io import write_graph
from adiabatic_mis.isbasis.basis import build_basis, write_basis_csv
from adiabatic_mis.logging.base import Logger
from adiabatic_mis.reporting.formats import render_csv, render_json
from adiabatic_mis.reporting.output import OutputDirectory
from adiabatic_mis.reporting.svg import Series, render_line_chart
from adiabatic_mis.spectra.gap import (
    fit_log_gap,
    gap_scan,
    gap_summary_dict,
    spider_min_gaps,
    write_gap_curve_csv,
)
from adiabatic_mis.validation.runner import validate_graph

_SUPPRESS = argparse.SUPPRESS


def _seeds(config: RunConfig) -> dict[str, int]:
    return {
        "graph": config.graph.seed,
        "master": config.ensemble.master_seed,
        "validation": config.validation.seed,
    }


def _finish(
    outputs: OutputDirectory, config: RunConfig, logger: Logger
) -> None:
    manifest = outputs.write_manifest(
        config.model_dump(mode="json"), _seeds(config)
    )
    logger.log_success(
        f"{outputs.prefix} terminé : {len(outputs.written) - 1} "
        f"fichier(s), manifeste {manifest}"
    )


def _outputs(
    name: str, config: RunConfig, logger: Logger
) -> OutputDirectory:
    return OutputDirectory(config.output.out, name, logger=logger)


def _add_flag(
    parser: argparse.ArgumentParser, flag: str, dest: str, text: str
) -> None:
    parser.add_argument(
        flag, dest=dest, action="store_true", default=_SUPPRESS, help=text
    )


class GenCommand(CliCommand):
    """Génère un graphe et l'écrit au format « n m » / « u v »."""

    @property
    def name(self) -> str:
        return "gen"

    def register(self, subparsers: Any) -> argparse.ArgumentParser:
        parser: argparse.ArgumentParser = subparsers.add_parser(
            self.name, help="génère un graphe"
        )
        add_graph_arguments(parser)
        return parser

    def execute(self, config: RunConfig, logger: Logger) -> None:
        graph, label = config.graph.load()
        outputs = _outputs(self.name, config, logger)
        outputs.write_text("graph.txt", write_graph(graph))
        logger.log_info(f"Graphe {label} : n={graph.n}, m={graph.m}")
        _finish(outputs, config, logger)


class ValidateCommand(CliCommand):
    """Vérifie H₀ et la matrice de jauge sur un petit graphe."""

    @property
    def name(self) -> str:
        return "validate"

    def register(self, subparsers: Any) -> argparse.ArgumentParser:
        parser: argparse.ArgumentParser = subparsers.add_parser(
            self.name, help="vérifie H0 et la matrice de jauge"
        )
        add_graph_arguments(parser)
        parser.add_argument(
            "--delta",
            dest="validation.delta",
            type=float,
            default=_SUPPRESS,
            help="couplage Δ de H0 (défaut : 1)",
        )
        parser.add_argument(
            "--samples",
            dest="validation.samples",
            type=int,
            default=_SUPPRESS,
            help="nombre de tuples (θ, φ, ω_θ, ω_φ) tirés",
        )
        parser.add_argument(
            "--check-seed",
            dest="validation.seed",
            type=seed_value,
            default=_SUPPRESS,
            help="graine du tirage des tuples",
        )
        return parser

    def execute(self, config: RunConfig, logger: Logger) -> None:
        graph, _ = config.graph.load()
        settings = config.validation
        report = validate_graph(
            graph,
            delta=settings.delta,
            samples=settings.samples,
            seed=settings.seed,
            logger=logger,
        )
        outputs = _outputs(self.name, config, logger)
        if config.output.format == "json":
            outputs.write_text("report.json", render_json(report.to_dict()))
        else:
            outputs.write_text(
                "report.csv",
                render_csv(
                    ["name", "passed", "detail"],
                    (
                        [outcome.name, outcome.passed, outcome.detail]
                        for outcome in report.outcomes
                    ),
                ),
            )
        logger.log_info(report.format_summary())
        _finish(outputs, config, logger)
        report.raise_for_failures()


class GapScanCommand(CliCommand):
    """Balaye l'écart spectral de A(θ), ou la série des araignées."""

    @property
    def name(self) -> str:
        return "gap-scan"

    def register(self, subparsers: Any) -> argparse.ArgumentParser:
        parser: argparse.ArgumentParser = subparsers.add_parser(
            self.name, help="balaye l'écart spectral sur θ ∈ [0, π]"
        )
        add_graph_arguments(parser)
        add_schedule_arguments(parser, with_steps=False)
        parser.add_argument(
            "--grid",
            dest="scan.grid",
            type=int,
            metavar="K",
            default=_SUPPRESS,
            help="nombre de points de grille (défaut : 201)",
        )
        _add_flag(
            parser,
            "--include-omega-theta",
            "scan.include_omega_theta",
            "inclut ω_θ = π·ω_φ/T dans A(θ)",
        )
        parser.add_argument(
            "--spider-series",
            dest="scan.spider_series",
            nargs=2,
            type=int,
            metavar=("A", "B"),
            default=_SUPPRESS,
            help="écarts minimaux des araignées A..B et ajustement log",
        )
        _add_flag(parser, "--svg", "output.svg", "trace la courbe en SVG")
        return parser

    def execute(self, config: RunConfig, logger: Logger) -> None:
        spider_series = config.scan.spider_series
        if spider_series is not None:
            self._series(config, spider_series, logger)
            return
        graph, label = config.graph.load()
        basis = build_basis(graph, config.ensemble.basis_cap, logger)
        omega_phi = config.schedule.omega_phi
        omega_theta = 0.0
        if config.scan.include_omega_theta:
            schedule = config.schedule.spec().schedule_for(graph.n)
            omega_theta = math.pi * omega_phi / schedule.total_time
        curve = gap_scan(
            basis,
            omega_phi=omega_phi,
            omega_theta=omega_theta,
            grid_points=config.scan.grid,
            logger=logger,
        )
        outputs = _outputs(self.name, config, logger)
        if config.output.format == "json":
            points = [
                {"theta": t, "lambda0": l0, "lambda1": l1, "gap": g}
                for t, l0, l1, g in zip(
                    curve.thetas.tolist(),
                    curve.lambda0.tolist(),
                    curve.lambda1.tolist(),
                    curve.gap.tolist(),
                )
            ]
            outputs.write_text("curve.json", render_json(points))
        else:
            outputs.write_text("curve.csv", write_gap_curve_csv(curve))
        summary = gap_summary_dict(curve)
        summary.update(
            {
                "generator": label,
                "seed": config.graph.seed,
                "omega_phi": omega_phi,
                "omega_theta": omega_theta,
                "grid": config.scan.grid,
            }
        )
        outputs.write_text("summary.json", render_json(summary))
        if config.output.svg:
            chart = render_line_chart(
                [Series("écart", curve.thetas.tolist(), curve.gap.tolist())],
                title=f"Écart spectral ({label}, n={graph.n})",
                x_label="θ",
                y_label="λ1 − λ0",
            )
            outputs.write_text("curve.svg", chart)
        _finish(outputs, config, logger)

    def _series(
        self,
        config: RunConfig,
        spider_series: tuple[int, int],
        logger: Logger,
    ) -> None:
        low, high = spider_series
        series = spider_min_gaps(
            list(range(low, high + 1)),
            grid_points=config.scan.grid,
            omega_phi=config.schedule.omega_phi,
            logger=logger,
        )
        fit = fit_log_gap([(float(n), gap) for n, gap in series])
        logger.log_info(
            f"ln(écart) ≈ {fit.intercept:.4f} + {fit.slope:.4f}·n "
            f"(résidu max {fit.residual:.2e})"
        )
        outputs = _outputs(self.name, config, logger)
        if config.output.format == "json":
            outputs.write_text(
                "series.json",
                render_json([{"n": n, "min_gap": g} for n, g in series]),
            )
        else:
            outputs.write_text(
                "series.csv", render_csv(["n", "min_gap"], series)
            )
        outputs.write_text(
            "summary.json",
            render_json(
                {
                    "n_values": [n for n, _ in series],
                    "grid": config.scan.grid,
                    "omega_phi": config.schedule.omega_phi,
                    "fit": fit._asdict(),
                }
            ),
        )
        if config.output.svg:
            chart = render_line_chart(
                [
                    Series(
                        "ln(écart min)",
                        [n for n, _ in series],
                        [math.log(g) for _, g in series],
                    )
                ],
                title="Araignées S_n : écart minimal",
                x_label="n",
                y_label="ln(écart)",
                markers=True,
            )
            outputs.write_text("series.svg", chart)
        _finish(outputs, config, logger)


class AnnealCommand(CliCommand):
    """Recuit d'un seul graphe et lecture des tailles mesurées."""

    @property
    def name(self) -> str:
        return "anneal"

    def register(self, subparsers: Any) -> argparse.ArgumentParser:
        parser: argparse.ArgumentParser = subparsers.add_parser(
            self.name, help="recuit adiabatique d'un graphe"
        )
        add_graph_arguments(parser)
        add_schedule_arguments(parser)
        parser.add_argument(
            "--fixed-theta",
            dest="schedule.fixed_theta",
            type=float,
            metavar="THETA",
            default=_SUPPRESS,
            help="garde θ constant (seul φ tourne)",
        )
        parser.add_argument(
            "--trajectory-samples",
            dest="output.trajectory_samples",
            type=int,
            metavar="S",
            default=_SUPPRESS,
            help="écrit S instantanés de la trajectoire",
        )
        parser.add_argument(
            "--basis-cap",
            dest="ensemble.basis_cap",
            type=int,
            default=_SUPPRESS,
            help="plafond de la base des ensembles indépendants",
        )
        _add_flag(
            parser,
            "--dump-basis",
            "output.dump_basis",
            "écrit la base (index, masque, taille)",
        )
        _add_flag(
            parser,
            "--record-runtime",
            "output.record_runtime",
            "renseigne runtime_ms (casse l'identité octet à octet)",
        )
        return parser

    def _schedule(self, config: RunConfig, n: int) -> Schedule:
        settings = config.schedule
        if settings.fixed_theta is None:
            return settings.spec().schedule_for(n)
        total_time = settings.total_time or float(n) ** settings.gamma
        return Schedule.fixed_theta(
            settings.fixed_theta,
            total_time,
            settings.omega_phi,
            steps=settings.steps,
            n=n,
        )

    def execute(self, config: RunConfig, logger: Logger) -> None:
        graph, label = config.graph.load()
        schedule = self._schedule(config, graph.n)
        outcome = anneal(
            graph,
            schedule,
            generator=label,
            seed=config.graph.seed,
            basis_cap=config.ensemble.basis_cap,
            record_runtime=config.output.record_runtime,
            logger=logger,
        )
        record = outcome.record
        logger.log_info(
            f"α={record.alpha}, N̄={record.mean_size:.6f}, "
            f"r={record.ratio:.6f}, P(MIS)={record.mis_probability:.6f}"
        )
        outputs = _outputs(self.name, config, logger)
        if config.output.format == "json":
            outputs.write_text(
                "run.json", render_json(run_record_dict(record))
            )
        else:
            outputs.write_text("run.csv", write_runs_csv([record]))
        sizes = size_distribution(outcome.state, outcome.basis).tolist()
        outputs.write_text(
            "summary.json",
            render_json(
                {
                    "run": run_record_dict(record),
                    "steps": schedule.steps,
                    "omega_phi": schedule.omega_phi,
                    "omega_theta": schedule.omega_theta,
                    "fixed_theta": schedule.held_theta,
                    "dimension": len(outcome.basis),
                    "size_distribution": sizes,
                }
            ),
        )
        if config.output.dump_basis:
            outputs.write_text("basis.csv", write_basis_csv(outcome.basis))
        samples = config.output.trajectory_samples
        if samples is not None:
            snapshots = evolve_trajectory(
                outcome.basis,
                schedule,
                initial_state(outcome.basis),
                samples,
                logger,
            )
            outputs.write_text(
                "trajectory.csv", write_trajectory_csv(snapshots)
            )
        _finish(outputs, config, logger)


class EnsembleCommand(CliCommand):
    """Ensembles de graphes aléatoires et r̄ en fonction de n."""

    @property
    def name(self) -> str:
        return "ensemble"

    def register(self, subparsers: Any) -> argparse.ArgumentParser:
        parser: argparse.ArgumentParser = subparsers.add_parser(
            self.name, help="ensemble de recuits sur graphes aléatoires"
        )
        add_graph_arguments(parser, with_seed=False)
        add_schedule_arguments(parser)
        parser.add_argument(
            "--master-seed",
            "--seed",
            dest="ensemble.master_seed",
            type=seed_value,
            default=_SUPPRESS,
            help="graine maîtresse 64 bits",
        )
        parser.add_argument(
            "--count",
            dest="ensemble.count",
            type=int,
            default=_SUPPRESS,
            help="nombre de graphes (défaut : 200)",
        )
        parser.add_argument(
            "--parallelism",
            dest="ensemble.parallelism",
            type=int,
            default=_SUPPRESS,
            help="nombre de processus (défaut : cœurs disponibles)",
        )
        parser.add_argument(
            "--n-values",
            dest="ensemble.n_values",
            nargs="+",
            type=int,
            metavar="N",
            default=_SUPPRESS,
            help="balaye r̄ sur plusieurs tailles",
        )
        parser.add_argument(
            "--basis-cap",
            dest="ensemble.basis_cap",
            type=int,
            default=_SUPPRESS,
            help="plafond de base par membre",
        )
        _add_flag(
            parser,
            "--record-runtime",
            "output.record_runtime",
            "renseigne runtime_ms (casse l'identité octet à octet)",
        )
        _add_flag(parser, "--svg", "output.svg", "trace r̄ en fonction de n")
        return parser

    def execute(self, config: RunConfig, logger: Logger) -> None:
        spec, n = config.graph.generator()
        settings = config.ensemble
        common: dict[str, Any] = {
            "count": settings.count,
            "schedule": config.schedule.spec(),
            "master_seed": settings.master_seed,
            "parallelism": settings.parallelism,
            "basis_cap": settings.basis_cap,
            "record_runtime": config.output.record_runtime,
            "logger": logger,
        }
        results: list[EnsembleResult]
        if settings.n_values:
            results = sweep_n(spec, list(settings.n_values), **common)
        else:
            results = [run_ensemble(spec, n, **common)]

        outputs = _outputs(self.name, config, logger)
        records = [r for result in results for r in result.records]
        if config.output.format == "json":
            outputs.write_text(
                "runs.json",
                render_json([run_record_dict(r) for r in records]),
            )
        else:
            outputs.write_text("runs.csv", write_runs_csv(records))
        summaries = [ensemble_summary_dict(result) for result in results]
        series = sweep_series(results)
        summary: dict[str, Any] = (
            summaries[0]
            if len(summaries) == 1
            else {
                "ensembles": summaries,
                "series": [{"n": n, "r_bar": r} for n, r in series],
            }
        )
        outputs.write_text("summary.json", render_json(summary))
        if config.output.svg:
            if series:
                chart = render_line_chart(
                    [
                        Series(
                            spec.describe(),
                            [n for n, _ in series],
                            [r for _, r in series],
                        )
                    ],
                    title="Rapport moyen r̄ en fonction de n",
                    x_label="n",
                    y_label="r̄",
                    markers=True,
                )
                outputs.write_text("ratio.svg", chart)
            else:
                logger.log_warning("Aucun membre retenu : SVG non tracé")
        _finish(outputs, config, logger)


def default_commands() -> list[CliCommand]:
    """Les cinq sous-commandes, dans l'ordre de l'aide."""
    return [
        GenCommand(),
        ValidateCommand(),
        GapScanCommand(),
        AnnealCommand(),
        EnsembleCommand(),
    ]
