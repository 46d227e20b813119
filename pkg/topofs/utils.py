import json
import os
from typing import Any, Mapping

import numpy as np
import pandas as pd

from .errors import DataError, ValidationError


def to_builtin(value: Any) -> Any:
    # numpy scalars and arrays are not JSON serializable.
    if isinstance(value, Mapping):
        return {str(k): to_builtin(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_builtin(v) for v in value]
    if isinstance(value, np.ndarray):
        return [to_builtin(v) for v in value.tolist()]
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        # JSON has no infinities; keep them readable.
        return value if np.isfinite(value) else str(value)
    if isinstance(value, np.bool_):
        return bool(value)
    return value


def dumps_canonical(content: Any) -> str:
    """Serialize ``content`` with sorted keys so equal inputs give equal bytes."""
    return json.dumps(to_builtin(content), sort_keys=True, indent=2, allow_nan=False) + "\n"


def write_json(filename, content: Any) -> None:
    directory = os.path.dirname(os.fspath(filename))
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(filename, mode="w", encoding="utf-8", newline="\n") as file:
        file.write(dumps_canonical(content))


def write_csv(filename, frame: pd.DataFrame, index: bool = False) -> None:
    directory = os.path.dirname(os.fspath(filename))
    if directory:
        os.makedirs(directory, exist_ok=True)
    frame.to_csv(filename, index=index, float_format="%.17g", lineterminator="\n")


def write_similarity_csv(filename, values: np.ndarray, feature_names) -> None:
    frame = pd.DataFrame(values, index=list(feature_names), columns=list(feature_names))
    write_csv(filename, frame, index=True)


def read_json(path) -> dict:
    """Load a JSON object from ``path``."""
    if not os.path.isfile(path):
        raise DataError(f"no such file: {path}")
    with open(path, encoding="utf-8") as file:
        try:
            content = json.load(file)
        except json.JSONDecodeError as exc:
            raise DataError(f"{path} is not valid JSON: {exc}") from None
    if not isinstance(content, dict):
        raise ValidationError(f"{path} must hold a JSON object")
    return content
