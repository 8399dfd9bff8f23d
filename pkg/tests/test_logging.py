"""Tests pour le module logging."""

from pathlib import Path
from unittest.mock import MagicMock

import pytest

from adiabatic_mis.errors.exceptions import ConfigurationError
from adiabatic_mis.logging import (
    AnsiColors,
    build_logger,
    ConsoleLogger,
    FileLogger,
    Logger,
    NullLogger,
    TeeLogger,
)


class TestConsoleLogger:
    """Tests pour ConsoleLogger."""

    def test_info_sur_stdout(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Les informations vont sur stdout."""
        ConsoleLogger(colored=False).log_info("base construite")
        captured = capsys.readouterr()
        assert captured.out == "base construite\n"
        assert captured.err == ""

    def test_warning_et_error_sur_stderr(
        self, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """Avertissements et erreurs vont sur stderr, préfixés."""
        logger = ConsoleLogger(colored=False)
        logger.log_warning("repli dense")
        logger.log_error("dérive")
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "WARNING: repli dense" in captured.err
        assert "ERROR: dérive" in captured.err

    def test_mode_silencieux(self, capsys: pytest.CaptureFixture[str]) -> None:
        """verbosity=0 masque info et succès mais pas les erreurs."""
        logger = ConsoleLogger(verbosity=0, colored=False)
        logger.log_info("masqué")
        logger.log_success("masqué aussi")
        logger.log_error("visible")
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "visible" in captured.err

    def test_debug_seulement_en_verbeux(
        self, capsys: pytest.CaptureFixture[str]
    ) -> None:
        """Les messages de diagnostic exigent verbosity=2."""
        ConsoleLogger(verbosity=1, colored=False).log_debug("a")
        ConsoleLogger(verbosity=2, colored=False).log_debug("b")
        out = capsys.readouterr().out
        assert "DEBUG: a" not in out
        assert "DEBUG: b" in out

    def test_couleur_ansi(self, capsys: pytest.CaptureFixture[str]) -> None:
        """colored=True entoure le message des codes ANSI."""
        ConsoleLogger(colored=True).log_success("ok")
        out = capsys.readouterr().out
        assert out == f"{AnsiColors.GREEN}ok{AnsiColors.RESET}\n"


class TestNullLogger:
    """Tests pour NullLogger."""

    def test_ignore_tout(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Aucun message n'est émis."""
        logger = NullLogger()
        for method in (
            logger.log_info,
            logger.log_warning,
            logger.log_error,
            logger.log_debug,
            logger.log_success,
        ):
            method("rien")
        captured = capsys.readouterr()
        assert captured.out == captured.err == ""


class TestFileLogger:
    """Tests pour FileLogger."""

    def test_implements_logger_interface(self, tmp_path: Path) -> None:
        """FileLogger implémente l'interface Logger."""
        logger = FileLogger(str(tmp_path / "test.log"))
        assert isinstance(logger, Logger)
        logger.close()

    def test_ecrit_et_cree_le_repertoire(self, tmp_path: Path) -> None:
        """Le répertoire parent est créé et chaque message est écrit."""
        log_file = tmp_path / "runs" / "ensemble.log"
        logger = FileLogger(log_file)
        logger.log_info("membre 3 terminé")
        logger.log_success("r̄ calculé")
        logger.close()
        content = log_file.read_text(encoding="utf-8")
        assert "INFO - membre 3 terminé" in content
        assert "SUCCESS: r̄ calculé" in content

    def test_niveau_invalide(self, tmp_path: Path) -> None:
        """Un niveau inconnu lève ValueError."""
        with pytest.raises(ValueError, match="Niveau de log invalide"):
            FileLogger(tmp_path / "x.log", level="VERBOSE")

    def test_debug_filtre_au_niveau_info(self, tmp_path: Path) -> None:
        """Au niveau INFO, les messages DEBUG sont filtrés."""
        log_file = tmp_path / "filtre.log"
        logger = FileLogger(log_file, level="INFO")
        logger.log_debug("caché")
        logger.log_warning("affiché")
        logger.close()
        content = log_file.read_text(encoding="utf-8")
        assert "caché" not in content
        assert "affiché" in content


class TestTeeLogger:
    """Tests pour TeeLogger."""

    def test_diffuse_a_chaque_logger(self) -> None:
        """Chaque méthode est relayée à tous les loggers."""
        first, second = MagicMock(spec=Logger), MagicMock(spec=Logger)
        tee = TeeLogger([first, second])
        tee.log_info("i")
        tee.log_warning("w")
        tee.log_success("s")
        for logger in (first, second):
            logger.log_info.assert_called_once_with("i")
            logger.log_warning.assert_called_once_with("w")
            logger.log_success.assert_called_once_with("s")


class TestBuildLogger:
    """Tests pour la factory build_logger."""

    def test_console_par_defaut(self) -> None:
        """Sans configuration, un ConsoleLogger normal est créé."""
        logger = build_logger()
        assert isinstance(logger, ConsoleLogger)
        assert logger.verbosity == 1

    def test_verbosity_transmise(self) -> None:
        """La clé verbosity règle le ConsoleLogger."""
        logger = build_logger({"verbosity": 0})
        assert isinstance(logger, ConsoleLogger)
        assert logger.verbosity == 0

    def test_null(self) -> None:
        """type = null donne un NullLogger."""
        assert isinstance(build_logger({"type": "null"}), NullLogger)

    def test_file_avec_console(self, tmp_path: Path) -> None:
        """console_output combine console et fichier."""
        logger = build_logger(
            {
                "type": "file",
                "file": str(tmp_path / "tee.log"),
                "console_output": True,
            }
        )
        assert isinstance(logger, TeeLogger)

    def test_file_sans_chemin(self) -> None:
        """Le type file exige la clé file."""
        with pytest.raises(ConfigurationError, match="'file'"):
            build_logger({"type": "file"})

    def test_type_inconnu(self) -> None:
        """Un type inconnu lève ConfigurationError."""
        with pytest.raises(ConfigurationError, match="inconnu"):
            build_logger({"type": "syslog"})

    def test_niveau_invalide_devient_configuration_error(
        self, tmp_path: Path
    ) -> None:
        """Un niveau invalide est traduit en ConfigurationError."""
        with pytest.raises(ConfigurationError):
            build_logger(
                {
                    "type": "file",
                    "file": str(tmp_path / "x.log"),
                    "level": "LOUD",
                }
            )
