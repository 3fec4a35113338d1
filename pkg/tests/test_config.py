"""Tests for the environment settings."""

from pathlib import Path

import pytest
from pydantic import ValidationError

from selfselect.core.config import get_settings, reload_settings
from selfselect.models.universe import DomainKind, Universe


@pytest.fixture
def clean_settings(monkeypatch):
    """Reload settings around a test that changes the environment."""
    yield monkeypatch
    monkeypatch.undo()
    reload_settings()


class TestSettings:
    """Tests for the Settings class."""

    def test_defaults(self, clean_settings):
        """Test the default universe and campaign settings."""
        settings = reload_settings()
        assert settings.default_universe() == Universe(n=3, tau_max=3)
        assert settings.default_k == 3
        assert settings.jobs == 1
        assert not settings.vacuous_pass
        assert settings.include_same_outcome

    def test_environment_overrides(self, clean_settings):
        """Test that SELFSELECT_* variables are picked up."""
        clean_settings.setenv("SELFSELECT_DEFAULT_N", "5")
        clean_settings.setenv("SELFSELECT_DEFAULT_TAU_MAX", "4")
        clean_settings.setenv("SELFSELECT_DEFAULT_DOMAIN", "condorcet")
        clean_settings.setenv("SELFSELECT_DEFAULT_SEED_COUNT", "7")

        settings = reload_settings()

        assert settings.default_universe() == Universe(
            n=5, tau_max=4, domain_kind=DomainKind.CONDORCET
        )
        assert settings.default_seeds() == list(range(7))

    def test_invalid_environment(self, clean_settings):
        """Test that out-of-range values are rejected."""
        clean_settings.setenv("SELFSELECT_DEFAULT_N", "1")
        with pytest.raises(ValidationError):
            reload_settings()

    def test_report_path(self, clean_settings):
        """Test the saved report location."""
        clean_settings.setenv("SELFSELECT_REPORT_DIR", "/tmp/reports")
        settings = reload_settings()
        assert settings.report_path("theorem2") == Path("/tmp/reports/theorem2.json")

    def test_settings_are_cached(self):
        """Test that get_settings returns the same instance."""
        assert get_settings() is get_settings()
