import csv
import os
import sys
from typing import Iterable, Optional, Sequence


def format_float(value: float) -> str:
    """Full precision: 17 significant digits."""
    return f"{float(value):.17g}"


def write_csv(header: Sequence[str], rows: Iterable[Sequence[str]], filename: Optional[str] = None):
    """Write header and rows to `filename`, or to stdout if None."""
    if filename is None:
        writer = csv.writer(sys.stdout, lineterminator='\n')
        writer.writerow(header)
        writer.writerows(rows)
        return

    path_dir = os.path.dirname(filename)
    if path_dir:
        os.makedirs(path_dir, exist_ok=True)
    with open(filename, 'w', encoding='utf-8', newline='') as file:
        writer = csv.writer(file, lineterminator='\n')
        writer.writerow(header)
        writer.writerows(rows)
