from .parse_utils import LineParseError, convert_value, parse_assignments  # noqa
from .grid import GridSpecError, parse_grid  # noqa
from .csv_utils import format_float, write_csv  # noqa
