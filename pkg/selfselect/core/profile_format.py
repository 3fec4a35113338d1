"""
Selfselect Verifier - Profile Text Format.

Reads and writes the line-based profile format consumed by the CLI and
produced by every witness dump:

    # comment
    alternatives: x y z w
    voter: x > y > z > w
    voter: y > z > w > x
"""

from pathlib import Path

from selfselect.core.profiles import (
    AlternativeSet,
    ProfileError,
    StrictProfile,
    make_profile,
)


class ProfileParseError(ProfileError):
    """Exception raised when profile text cannot be parsed."""

    def __init__(self, message: str, line_number: int | None = None) -> None:
        """
        Initialize ProfileParseError.

        Args:
            message: Error message.
            line_number: 1-based line of the offending input, if known.
        """
        prefix = f"line {line_number}: " if line_number is not None else ""
        super().__init__(prefix + message)
        self.line_number = line_number


def _check_ranking(
    ranking: list[str], alt_set: AlternativeSet, line_number: int
) -> None:
    unknown = [label for label in ranking if label not in alt_set.labels]
    if unknown:
        raise ProfileParseError(f"unknown alternative(s) {unknown}", line_number)
    if len(set(ranking)) != len(ranking):
        raise ProfileParseError(f"duplicate alternative in {ranking}", line_number)
    if len(ranking) != alt_set.size:
        missing = [label for label in alt_set.labels if label not in ranking]
        raise ProfileParseError(f"ranking misses {missing}", line_number)


def parse_profile(text: str) -> StrictProfile:
    """
    Parse a profile from the text format.

    Args:
        text: Profile text.

    Returns:
        The validated profile.

    Raises:
        ProfileParseError: On any syntax or validation error.
    """
    alt_set: AlternativeSet | None = None
    rankings: list[list[str]] = []

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue

        keyword, sep, rest = line.partition(":")
        if not sep:
            raise ProfileParseError(
                f"expected '<keyword>: ...', got {line!r}", line_number
            )
        keyword = keyword.strip().lower()

        if keyword == "alternatives":
            if alt_set is not None:
                raise ProfileParseError("duplicate 'alternatives' line", line_number)
            try:
                alt_set = AlternativeSet(tuple(rest.split()))
            except ProfileError as e:
                raise ProfileParseError(str(e), line_number) from None
        elif keyword == "voter":
            if alt_set is None:
                raise ProfileParseError(
                    "'voter' line before 'alternatives'", line_number
                )
            ranking = [label.strip() for label in rest.split(">")]
            if any(not label for label in ranking):
                raise ProfileParseError(
                    f"empty label in ranking {rest.strip()!r}", line_number
                )
            _check_ranking(ranking, alt_set, line_number)
            rankings.append(ranking)
        else:
            raise ProfileParseError(f"unknown keyword {keyword!r}", line_number)

    if alt_set is None:
        raise ProfileParseError("missing 'alternatives' line")
    try:
        return make_profile(rankings, alt_set)
    except ProfileError as e:
        raise ProfileParseError(str(e)) from None


def format_profile(profile: StrictProfile, comment: str | None = None) -> str:
    """
    Render a profile in the text format.

    Args:
        profile: Profile to render.
        comment: Optional comment placed on the first line.

    Returns:
        The profile text, newline-terminated.
    """
    lines = []
    if comment:
        lines.extend(f"# {part}" for part in comment.splitlines())
    lines.append("alternatives: " + " ".join(profile.alt_set.labels))
    lines.extend("voter: " + " > ".join(row) for row in profile.labelled_rankings())
    return "\n".join(lines) + "\n"


def read_profile(path: Path) -> StrictProfile:
    """
    Read a profile file.

    Raises:
        ProfileParseError: If the file cannot be read or parsed.
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ProfileParseError(f"cannot read {path}: {e}") from None
    return parse_profile(text)
