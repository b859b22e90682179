"""Complex matrix (de)serialization.

Matrices travel as JSON objects {"dim": d, "re": [...], "im": [...]} with
row-major entry lists of length d*d; the split into real and imaginary
parts keeps the encoding unambiguous.  A file may hold either one matrix
object or a list of them.
"""

from __future__ import annotations

import json

import numpy as np


def matrix_to_dict(matrix) -> dict:
    m = np.asarray(matrix, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    return {
        "dim": m.shape[0],
        "re": m.real.ravel().tolist(),
        "im": m.imag.ravel().tolist(),
    }


def matrix_from_dict(obj) -> np.ndarray:
    if not isinstance(obj, dict):
        raise ValueError("matrix object must be a JSON object with dim/re/im")
    missing = {"dim", "re", "im"} - obj.keys()
    if missing:
        raise ValueError(f"matrix object is missing fields: {sorted(missing)}")
    dim = obj["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise ValueError(f"dim must be a positive integer, got {dim!r}")
    re = np.asarray(obj["re"], dtype=float)
    im = np.asarray(obj["im"], dtype=float)
    if re.shape != (dim * dim,) or im.shape != (dim * dim,):
        raise ValueError(f"re and im must be flat lists of length {dim * dim}")
    return (re + 1j * im).reshape(dim, dim)


def write_matrix(path, matrix) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(matrix_to_dict(matrix), fh)
        fh.write("\n")


def read_matrix(path) -> np.ndarray:
    with open(path, encoding="utf-8") as fh:
        return matrix_from_dict(json.load(fh))


def read_matrices(path) -> list:
    """Read one matrix or a list of matrices; always returns a list."""
    with open(path, encoding="utf-8") as fh:
        payload = json.load(fh)
    if isinstance(payload, list):
        return [matrix_from_dict(item) for item in payload]
    return [matrix_from_dict(payload)]
