"""Tests for the profile text format."""

import pytest
from hypothesis import given

from selfselect.core.profile_format import (
    ProfileParseError,
    format_profile,
    parse_profile,
    read_profile,
)
from selfselect.core.theorems import example_profile
from tests.strategies import profiles

EXAMPLE_TEXT = """\
# the five-voter example
alternatives: x y z w
voter: x > y > z > w
voter: x > y > z > w
voter: x > y > z > w

voter: y > z > w > x
voter: y > z > w > x
"""


class TestParseProfile:
    """Tests for parse_profile."""

    def test_parse_example(self):
        """Test parsing with comments and blank lines."""
        assert parse_profile(EXAMPLE_TEXT) == example_profile()

    def test_keywords_are_case_insensitive(self):
        """Test that keywords ignore case and surrounding spaces."""
        text = "Alternatives: a b\n VOTER : a>b\nvoter: b > a\n"
        profile = parse_profile(text)
        assert profile.labelled_rankings() == [["a", "b"], ["b", "a"]]

    @pytest.mark.parametrize(
        "text, line_number",
        [
            ("voter: a > b\nalternatives: a b\n", 1),
            ("alternatives: a b\nalternatives: a b\n", 2),
            ("alternatives: a b\nvoter: a > c\n", 2),
            ("alternatives: a b\nvoter: a > a\n", 2),
            ("alternatives: a b c\nvoter: a > b\n", 2),
            ("alternatives: a b\nvoter: a > > b\n", 2),
            ("alternatives: a b\nrank: a > b\n", 2),
            ("alternatives a b\n", 1),
            ("alternatives: a a\n", 1),
        ],
        ids=[
            "voter-first",
            "duplicate-header",
            "unknown",
            "duplicate",
            "missing",
            "empty-label",
            "keyword",
            "no-colon",
            "duplicate-labels",
        ],
    )
    def test_errors_carry_line_numbers(self, text, line_number):
        """Test that syntax errors report the offending line."""
        with pytest.raises(ProfileParseError) as exc_info:
            parse_profile(text)
        assert exc_info.value.line_number == line_number
        assert str(exc_info.value).startswith(f"line {line_number}: ")

    def test_missing_alternatives(self):
        """Test that a profile needs an alternatives line."""
        with pytest.raises(ProfileParseError, match="missing 'alternatives'"):
            parse_profile("# nothing here\n")

    def test_single_voter(self):
        """Test that a single voter is rejected without a line number."""
        with pytest.raises(ProfileParseError) as exc_info:
            parse_profile("alternatives: a b\nvoter: a > b\n")
        assert exc_info.value.line_number is None


class TestFormatProfile:
    """Tests for format_profile and read_profile."""

    def test_format_with_comment(self):
        """Test rendering with a comment line."""
        text = format_profile(parse_profile(EXAMPLE_TEXT), comment="P")
        lines = text.splitlines()
        assert lines[0] == "# P"
        assert lines[1] == "alternatives: x y z w"
        assert lines[2] == "voter: x > y > z > w"
        assert text.endswith("\n")

    @given(profiles())
    def test_formatted_profiles_parse_back(self, profile):
        """Test that witness dumps can be read back."""
        assert parse_profile(format_profile(profile)) == profile

    def test_read_profile(self, tmp_path):
        """Test reading a profile file."""
        path = tmp_path / "example.txt"
        path.write_text(EXAMPLE_TEXT, encoding="utf-8")
        assert read_profile(path) == example_profile()

    def test_read_missing_file(self, tmp_path):
        """Test that unreadable files raise a parse error."""
        with pytest.raises(ProfileParseError, match="cannot read"):
            read_profile(tmp_path / "absent.txt")
