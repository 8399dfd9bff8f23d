"""Tests pour adiabatic_mis."""
