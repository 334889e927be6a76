"""
Reports as JSON files: sorted keys, indent 4.
"""
import json
import os
from pathlib import Path
from typing import Optional, Union

import numpy as np


def _to_builtin(o):
    if hasattr(o, '_asdict'):
        o = o._asdict()
    if isinstance(o, dict):
        return {str(k): _to_builtin(v) for k, v in o.items()}
    if isinstance(o, (list, tuple)):
        return [_to_builtin(v) for v in o]
    if isinstance(o, np.ndarray):
        return _to_builtin(o.tolist())
    if isinstance(o, bytes):
        return o.decode()
    if isinstance(o, np.bool_):
        return bool(o)
    if isinstance(o, np.integer):
        return int(o)
    if isinstance(o, np.floating):
        return float(o)
    return o


def get_file_path(file_name: Union[str, Path],
                  path: Optional[Union[str, Path]] = None,
                  extension: Optional[str] = None) -> Path:
    file_name = str(file_name)
    if extension is not None:
        if extension[0] != '.':
            extension = '.' + extension
        if not file_name.endswith(extension):
            file_name = file_name + extension
    if path is not None:
        return Path(path, file_name)
    return Path(file_name)


def json_read(file: Union[str, Path], path: Optional[Union[str, Path]] = None) -> dict:
    path = get_file_path(file, path=path, extension='.json')
    with open(path, 'r', encoding='utf-8') as json_file:
        return json.load(json_file)


def dumps(data) -> str:
    """Deterministic JSON text of `data`; numpy values and `_asdict` objects are converted."""
    return json.dumps(_to_builtin(data), sort_keys=True, indent=4)


def json_write(file: Union[str, Path], data, path: Optional[Union[str, Path]] = None) -> Path:
    """Saves data to the file.
    Path is optional to precise the location of the file.
    Extension in filename is optional."""
    path = get_file_path(file, path, '.json')

    path_dir = os.path.dirname(path)
    if path_dir:
        os.makedirs(path_dir, exist_ok=True)

    with open(path, 'w', encoding='utf-8') as outfile:
        outfile.write(dumps(data))
        outfile.write('\n')
    return path
