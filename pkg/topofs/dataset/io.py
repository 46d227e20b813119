"""CSV ingestion.

The single supported format is UTF-8, comma separated, with a mandatory header
row and '.' as decimal point. One column may hold class labels; every other cell
must parse as a finite real number.
"""

import logging
import os
from typing import Optional

import numpy as np
import pandas as pd

from ..errors import DataError
from .feature_matrix import FeatureMatrix

logger = logging.getLogger(__name__)


def load_csv(path, label_column: Optional[str] = None) -> FeatureMatrix:
    """
    Load a CSV file into a :class:`FeatureMatrix`.

    Args:
        path: Location of the file.
        label_column (str, optional): Name of the column holding class labels.

    Returns:
        FeatureMatrix: Features in file column order, labels extracted if named.

    Raises:
        DataError: Missing file, duplicate header names, absent label column or a cell
            that is not a finite number. Cell errors name the 1-based data row and the column.
    """
    if not os.path.isfile(path):
        raise DataError(f"no such file: {path}")
    try:
        raw = pd.read_csv(path, header=None, dtype=str, keep_default_na=False, encoding="utf-8")
    except pd.errors.EmptyDataError:
        raise DataError(f"{path} is empty") from None
    except (pd.errors.ParserError, UnicodeDecodeError) as exc:
        raise DataError(f"cannot parse {path}: {exc}") from None

    header = [name.strip() for name in raw.iloc[0].tolist()]
    body = raw.iloc[1:].reset_index(drop=True)
    body.columns = range(len(header))

    seen = set()
    for name in header:
        if name in seen:
            raise DataError(f"duplicate column name {name!r} in {path}")
        seen.add(name)

    labels = None
    feature_positions = list(range(len(header)))
    if label_column is not None:
        if label_column not in header:
            raise DataError(f"label column {label_column!r} not found in {path}")
        label_position = header.index(label_column)
        labels = body[label_position].str.strip().to_numpy()
        feature_positions.remove(label_position)

    columns = []
    for position in feature_positions:
        cells = body[position].str.strip()
        parsed = pd.to_numeric(cells, errors="coerce").to_numpy(dtype=np.float64)
        columns.append(parsed)
    values = np.column_stack(columns) if columns else np.empty((len(body), 0))

    bad = ~np.isfinite(values)
    if bad.any():
        row, col = np.argwhere(bad)[0]
        cell = body[feature_positions[col]].iloc[row]
        raise DataError(
            f"row {row + 1}, column {header[feature_positions[col]]!r}: {cell!r} is not a finite number"
        )

    names = [header[p] for p in feature_positions]
    data = FeatureMatrix(values=values, feature_names=tuple(names), labels=labels)
    logger.info("loaded %s: %d samples, %d features", path, data.n_samples, data.n_features)
    return data
