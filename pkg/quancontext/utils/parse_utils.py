from typing import List, Tuple, Union

Value = Union[str, int, float]


class LineParseError(ValueError):
    """A `key = value` text has a malformed line. `line` is 1-based."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.reason = message


def convert_value(value: str) -> Value:
    """Return int or float if conversion is possible otherwise the stripped str."""
    value = value.replace("_", "").strip()
    for kind in (int, float):
        try:
            return kind(value)
        except ValueError:
            pass
    return value


def parse_assignments(text: str, /) -> List[Tuple[int, str, Value]]:
    """Parse `key = value` lines, `#` starts a comment.

    Returns (line number, key, value) for every assignment.
    Raises LineParseError for a line without '=' or with an empty key or value.
    """
    assignments = []
    for number, line in enumerate(text.split('\n'), start=1):
        line = line.split('#')[0].strip()
        if not line:
            continue
        if '=' not in line:
            raise LineParseError(f"expected 'key = value', got '{line}'", number)
        key, value = (part.strip() for part in line.split('=', 1))
        if not key or not key[0].isalpha():
            raise LineParseError(f"invalid key '{key}'", number)
        if not value:
            raise LineParseError(f"missing value for '{key}'", number)
        assignments.append((number, key, convert_value(value)))
    return assignments

