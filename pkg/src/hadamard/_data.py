"""Catalog file access.

Catalog data ships inside the package under ``hadamard/data``; the
environment variable HADAMARD_DATA_DIR overrides the location.  Every
loader re-verifies its records and raises CatalogError naming the
offending record, so a corrupted data file cannot produce silent bad
mathematics.
"""

import json
import os
from pathlib import Path


class CatalogError(ValueError):
    """A catalog record failed verification or could not be read."""


def data_path(name):
    base = os.environ.get("HADAMARD_DATA_DIR")
    root = Path(base) if base else Path(__file__).parent / "data"
    return root / name


def load_json(name):
    path = data_path(name)
    try:
        with open(path) as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise CatalogError("catalog file %s not found" % path) from None
    except json.JSONDecodeError as e:
        raise CatalogError("catalog file %s is not valid JSON: %s" % (path, e)) from None
