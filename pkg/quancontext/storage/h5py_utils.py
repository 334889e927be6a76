"""
Result files in HDF5: nested dicts of arrays, one group per dict level.
"""
import logging
import os
import time
from typing import Optional, Protocol, Set, Union

import h5py
import numpy as np

logger = logging.getLogger(__name__)

SAVE_RETRIES = 5
RETRY_DELAY = 0.2  # s


class ClassWithAsdict(Protocol):
    """Any class with predefined `_asdict` attribute.
    `_asdict` should return a dictionary of arrays, numbers, str or nested dicts."""

    def _asdict(self) -> dict:
        ...


class ClassWithAsarray(Protocol):
    """Any class with predefined `asarray` attribute returning a np.ndarray."""

    def asarray(self) -> np.ndarray:
        ...


class FileLockedError(Exception):
    """Exception raised when a file is locked"""


class LockFile:
    """Creates `<name>.lock` next to the file for the duration of the context."""

    def __init__(self, filename: str):
        self.lock_filename = os.path.splitext(filename)[0] + ".lock"

    def __enter__(self):
        if os.path.exists(self.lock_filename):
            raise FileLockedError(f"File locked by {self.lock_filename} and cannot be opened in write mode")
        with open(self.lock_filename, 'w', encoding='utf-8'):
            pass
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        if os.path.exists(self.lock_filename):
            os.remove(self.lock_filename)


DictOrArrayLike = Optional[Union[dict, list, tuple, np.ndarray, ClassWithAsdict, ClassWithAsarray,
                                 float, int, str]]


def save_sub_dict(group: Union[h5py.File, h5py.Group], data: DictOrArrayLike, key: str):
    if hasattr(data, '_asdict'):
        data = data._asdict()  # type: ignore
    if hasattr(data, 'asarray'):
        data = data.asarray()  # type: ignore
    if isinstance(data, dict):
        subgroup = group.create_group(key, track_order=True)
        for sub_key, value in data.items():
            save_sub_dict(subgroup, value, sub_key)
    elif data is not None:
        if isinstance(data, (tuple, list)):
            data = np.array(data)
        if isinstance(data, np.ndarray) and data.ndim > 0:
            group.create_dataset(key, data=data, compression="gzip", track_times=False)
        else:
            group.create_dataset(key, data=data, track_times=False)


def _write(filename: str, data: dict):
    with LockFile(filename):
        with h5py.File(filename, 'a') as file:
            for key, value in data.items():
                if key in file.keys():
                    file.pop(key)
                if value is None:
                    continue
                save_sub_dict(file, value, key)


def save_dict(filename: str, data: dict, retries: int = SAVE_RETRIES) -> str:
    """Save `data` to `filename`, replacing existing keys.

    Values may be dicts, arrays, numbers, str or objects with `_asdict`/`asarray`.
    A locked file is retried `retries` times before FileLockedError propagates.
    """
    path_dir = os.path.dirname(filename)
    if path_dir:
        os.makedirs(path_dir, exist_ok=True)

    for attempt in range(retries + 1):
        try:
            _write(filename, data)
            return filename
        except FileLockedError:
            if attempt == retries:
                raise
            logger.info("File %s is locked, retry %d/%d", filename, attempt + 1, retries)
            time.sleep(RETRY_DELAY)
    return filename


def transform_on_open(value):
    if isinstance(value, bytes):
        return value.decode()
    if isinstance(value, np.ndarray) and value.dtype.kind == 'S':
        return np.char.decode(value)
    return value


def keys_h5(filename: str) -> Set[str]:
    with h5py.File(filename, 'r') as file:
        return set(file.keys())


def open_h5(fullpath: str, key: Optional[Union[str, Set[str]]] = None) -> dict:
    with h5py.File(fullpath, 'r') as file:
        return open_h5_group(file, key=key)


def open_h5_group(group: Union[h5py.File, h5py.Group], key: Optional[Union[str, Set[str]]] = None) -> dict:
    data = {}
    if key is not None:
        key = key if isinstance(key, set) else {key}

    for group_key in group.keys():
        if key is not None and group_key not in key:
            continue
        value = group[group_key]
        if isinstance(value, h5py.Group):
            data[group_key] = open_h5_group(value)
        else:
            data[group_key] = transform_on_open(value[()])  # type: ignore
    return data
