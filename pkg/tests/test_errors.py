#!/usr/bin/env python3
"""Tests unitaires pour le module errors."""

import sys
import unittest
from unittest.mock import MagicMock, patch

import pytest

from adiabatic_mis.errors.base import ErrorHandler, ErrorHandlerChain
from adiabatic_mis.errors.console_handler import ConsoleErrorHandler
from adiabatic_mis.errors.exceptions import (
    BasisCapExceededError,
    ComputationError,
    ConfigurationError,
    GraphFormatError,
    GraphRangeError,
    KrylovBreakdownError,
    NormDriftError,
    SimulatorError,
    UsageError,
    ValidationCheckError,
    exit_code_for,
)
from adiabatic_mis.errors.logger_handler import LoggerErrorHandler


class TestHierarchie:
    """Tests de la hiérarchie et des codes de sortie."""

    @pytest.mark.parametrize(
        "error",
        [
            ConfigurationError("x"),
            GraphFormatError("x"),
            GraphRangeError("x"),
        ],
    )
    def test_erreurs_d_usage_sortent_en_2(self, error: Exception) -> None:
        """Les erreurs d'usage ont le code de sortie 2."""
        assert isinstance(error, UsageError)
        assert exit_code_for(error) == 2

    @pytest.mark.parametrize(
        "error",
        [
            BasisCapExceededError(10, 11),
            NormDriftError(1e-6, 1e-8),
            KrylovBreakdownError("x"),
            ValidationCheckError("h0-gap"),
        ],
    )
    def test_erreurs_de_calcul_sortent_en_1(self, error: Exception) -> None:
        """Les échecs de calcul ont le code de sortie 1."""
        assert isinstance(error, ComputationError)
        assert exit_code_for(error) == 1

    def test_exception_etrangere_sort_en_1(self) -> None:
        """Une exception hors hiérarchie donne le code 1."""
        assert exit_code_for(RuntimeError("bug")) == 1

    def test_codes_machine_distincts(self) -> None:
        """Chaque classe concrète porte un code stable distinct."""
        codes = {
            cls.code
            for cls in (
                ConfigurationError,
                GraphFormatError,
                GraphRangeError,
                BasisCapExceededError,
                NormDriftError,
                KrylovBreakdownError,
                ValidationCheckError,
            )
        }
        assert len(codes) == 7


class TestErreursDetaillees:
    """Tests des attributs portés par les exceptions."""

    def test_graph_format_error_prefixe_la_ligne(self) -> None:
        """Le numéro de ligne préfixe le message."""
        error = GraphFormatError("arête dupliquée", line_number=3)
        assert error.line_number == 3
        assert str(error) == "ligne 3 : arête dupliquée"

    def test_graph_format_error_sans_ligne(self) -> None:
        """Sans numéro de ligne, le message est inchangé."""
        error = GraphFormatError("fichier vide")
        assert error.line_number is None
        assert str(error) == "fichier vide"

    def test_basis_cap_exceeded_porte_cap_et_found(self) -> None:
        """Le plafond et le nombre trouvé sont conservés."""
        error = BasisCapExceededError(cap=100, found=101)
        assert (error.cap, error.found) == (100, 101)
        assert "100" in str(error)

    def test_norm_drift_porte_la_derive(self) -> None:
        """La dérive et la tolérance sont conservées."""
        error = NormDriftError(drift=2e-7, tolerance=1e-8)
        assert error.drift == pytest.approx(2e-7)
        assert error.tolerance == pytest.approx(1e-8)

    def test_validation_check_error_nomme_l_invariant(self) -> None:
        """L'invariant en échec figure dans le message."""
        error = ValidationCheckError("gauge-consistency", "écart 1e-3")
        assert error.invariant == "gauge-consistency"
        assert "gauge-consistency" in str(error)
        assert "écart 1e-3" in str(error)


class TestConsoleErrorHandler(unittest.TestCase):
    """Tests pour ConsoleErrorHandler."""

    def setUp(self) -> None:
        self.handler = ConsoleErrorHandler()

    @patch("builtins.print")
    def test_affiche_code_et_message(self, mock_print: MagicMock) -> None:
        """Le code machine précède le message."""
        self.handler.handle(NormDriftError(1e-6, 1e-8))
        first = mock_print.call_args_list[0]
        self.assertTrue(first.args[0].startswith("[norm-drift] "))
        self.assertIs(first.kwargs["file"], sys.stderr)

    @patch("builtins.print")
    def test_affiche_la_piste_de_solution(
        self, mock_print: MagicMock
    ) -> None:
        """NormDriftError suggère d'augmenter --steps."""
        self.handler.handle(NormDriftError(1e-6, 1e-8))
        mock_print.assert_any_call(
            "Solution : augmentez --steps.", file=sys.stderr
        )

    @patch("builtins.print")
    def test_solution_par_isinstance(self, mock_print: MagicMock) -> None:
        """Une sous-classe hérite de la solution de sa classe mère."""
        handler = ConsoleErrorHandler({UsageError: "Solution : relisez."})
        handler.handle(GraphRangeError("n hors bornes"))
        mock_print.assert_any_call("Solution : relisez.", file=sys.stderr)

    @patch("builtins.print")
    def test_erreur_inattendue(self, mock_print: MagicMock) -> None:
        """Une exception étrangère est signalée comme inattendue."""
        self.handler.handle(ValueError("boum"))
        mock_print.assert_called_once_with(
            "Erreur inattendue (ValueError) : boum", file=sys.stderr
        )


class TestLoggerErrorHandler:
    """Tests pour LoggerErrorHandler."""

    def test_log_le_code_machine(self) -> None:
        """Le message loggé commence par le code de l'erreur."""
        logger = MagicMock()
        LoggerErrorHandler(logger).handle(ConfigurationError("grid < 2"))
        logger.log_error.assert_called_once_with(
            "configuration-error: grid < 2"
        )

    def test_log_une_erreur_inattendue(self) -> None:
        """Une exception étrangère est loggée avec son type."""
        logger = MagicMock()
        LoggerErrorHandler(logger).handle(KeyError("k"))
        message = logger.log_error.call_args.args[0]
        assert message.startswith("Erreur inattendue: KeyError")


class TestErrorHandlerChain:
    """Tests pour ErrorHandlerChain."""

    def test_diffuse_a_tous_les_handlers(self) -> None:
        """Chaque handler reçoit l'erreur, dans l'ordre d'ajout."""
        first, second = MagicMock(spec=ErrorHandler), MagicMock(
            spec=ErrorHandler
        )
        chain = ErrorHandlerChain()
        chain.add_handler(first)
        chain.add_handler(second)
        error = GraphRangeError("n = 0")
        code = chain.handle(error)
        first.handle.assert_called_once_with(error)
        second.handle.assert_called_once_with(error)
        assert code == 2

    def test_handler_defaillant_n_interrompt_pas_la_chaine(
        self, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """Un handler qui lève est signalé, les suivants s'exécutent."""
        broken = MagicMock(spec=ErrorHandler)
        broken.handle.side_effect = RuntimeError("panne")
        after = MagicMock(spec=ErrorHandler)
        chain = ErrorHandlerChain()
        chain.add_handler(broken)
        chain.add_handler(after)
        code = chain.handle(SimulatorError("x"))
        after.handle.assert_called_once()
        assert code == 1
        assert "a échoué : panne" in capsys.readouterr().err

    def test_handlers_a_la_construction(self) -> None:
        """Les handlers passés au constructeur précèdent les ajouts."""
        first, second = MagicMock(spec=ErrorHandler), MagicMock(
            spec=ErrorHandler
        )
        chain = ErrorHandlerChain([first])
        chain.add_handler(second)
        assert chain.handlers == (first, second)

    @pytest.mark.parametrize(
        "error, code",
        [
            (ConfigurationError("clé inconnue"), 2),
            (NormDriftError(1e-6, 1e-8), 1),
            (KeyError("x"), 1),
        ],
    )
    def test_code_de_sortie(self, error: Exception, code: int) -> None:
        """Usage → 2 ; calcul ou exception inattendue → 1."""
        assert ErrorHandlerChain().handle(error) == code
