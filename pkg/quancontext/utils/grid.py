"""
Grid specs for parameter sweeps.

```
parse_grid("0.01:2:50log")  # 50 log-spaced values from 0.01 to 2
parse_grid("0:1:11")        # 11 evenly spaced values
parse_grid("0.05,0.75")     # explicit list
```
"""
from typing import List

import numpy as np


class GridSpecError(ValueError):
    """Malformed grid spec."""


def _to_float(text: str, spec: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise GridSpecError(f"Cannot read '{text}' as a number in grid spec '{spec}'") from None


def parse_grid(spec: str) -> List[float]:
    spec = spec.strip()
    if not spec:
        raise GridSpecError("Empty grid spec")

    if ':' not in spec:
        return [_to_float(item.strip(), spec) for item in spec.split(',')]

    parts = spec.split(':')
    if len(parts) != 3:
        raise GridSpecError(f"Grid spec should be 'start:stop:count[log]'. Got '{spec}'")
    start, stop = (_to_float(part, spec) for part in parts[:2])
    count_text = parts[2].strip()
    log = count_text.endswith('log')
    if log:
        count_text = count_text[:-3]
    if not count_text.isdigit() or int(count_text) < 1:
        raise GridSpecError(f"Grid count should be a positive integer. Got '{parts[2]}'")
    count = int(count_text)

    if log:
        if start <= 0 or stop <= 0:
            raise GridSpecError(f"Log grid needs positive bounds. Got '{spec}'")
        return [float(x) for x in np.geomspace(start, stop, count)]
    return [float(x) for x in np.linspace(start, stop, count)]
