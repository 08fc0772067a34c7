"""
Checkpoint files: named tensors in an ``.npz`` archive with a format version.
"""

import logging
from pathlib import Path
from typing import Union

import numpy as np

from xlmimo.constants import CHECKPOINT_FORMAT_VERSION

log = logging.getLogger(__name__)

VERSION_KEY = "__format_version__"


def save_checkpoint(path: Union[str, Path], tensors: dict[str, np.ndarray]) -> Path:
    """
    Write named tensors; dtypes and shapes are kept so reloads are bit-exact.
    """
    if VERSION_KEY in tensors:
        raise ValueError(f"{VERSION_KEY} is reserved")
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "wb") as handle:
        np.savez(
            handle,
            **{VERSION_KEY: np.array(CHECKPOINT_FORMAT_VERSION)},
            **dict(sorted(tensors.items())),
        )
    log.info("Checkpoint with %d tensors written to %s", len(tensors), path)
    return path


def load_checkpoint(path: Union[str, Path]) -> dict[str, np.ndarray]:
    """
    Read a checkpoint written by ``save_checkpoint``.

    Raises:
        ValueError: If the file carries no version or an unsupported one.
    """
    with np.load(path, allow_pickle=False) as archive:
        if VERSION_KEY not in archive.files:
            raise ValueError(f"{path} is not an xlmimo checkpoint")
        version = int(archive[VERSION_KEY])
        if version != CHECKPOINT_FORMAT_VERSION:
            raise ValueError(f"Unsupported checkpoint version {version}")
        return {key: archive[key] for key in archive.files if key != VERSION_KEY}
