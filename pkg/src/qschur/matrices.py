"""Real matrices carrying explicit row and column basis labels, plus JSON I/O."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

import numpy as np

BASIS_ORDER_VERSION = "1"


@dataclass
class LabeledMatrix:
    """A dense real matrix with text labels for its row and column bases."""

    data: np.ndarray
    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]
    metadata: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        self.data = np.asarray(self.data, dtype=float)
        self.row_labels = tuple(self.row_labels)
        self.col_labels = tuple(self.col_labels)
        if self.data.shape != (len(self.row_labels), len(self.col_labels)):
            raise ValueError(
                f"shape {self.data.shape} does not match "
                f"{len(self.row_labels)} x {len(self.col_labels)} labels"
            )

    def __array__(self, dtype=None, copy=None):
        return self.data if dtype is None else self.data.astype(dtype)

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    def entry(self, row: str, col: str) -> float:
        return float(self.data[self.row_labels.index(row), self.col_labels.index(col)])

    def to_document(self, fmt: str = "dense") -> dict[str, Any]:
        meta = {"basis_order_version": BASIS_ORDER_VERSION, **self.metadata}
        doc: dict[str, Any] = {
            "metadata": meta,
            "row_labels": list(self.row_labels),
            "col_labels": list(self.col_labels),
            "format": fmt,
        }
        if fmt == "dense":
            doc["entries"] = [float(x) for x in self.data.ravel()]
        elif fmt == "sparse":
            r, c = np.nonzero(self.data)
            doc["entries"] = [[int(i), int(j), float(self.data[i, j])] for i, j in zip(r, c)]
        else:
            raise ValueError(f"unknown format {fmt!r}")
        return doc

    @classmethod
    def from_document(cls, doc: dict[str, Any]) -> LabeledMatrix:
        rows, cols = doc["row_labels"], doc["col_labels"]
        shape = (len(rows), len(cols))
        fmt = doc.get("format", "dense")
        if fmt == "dense":
            data = np.array(doc["entries"], dtype=float).reshape(shape)
        elif fmt == "sparse":
            data = np.zeros(shape)
            for i, j, v in doc["entries"]:
                data[i, j] = v
        else:
            raise ValueError(f"unknown format {fmt!r}")
        meta = {k: v for k, v in doc.get("metadata", {}).items() if k != "basis_order_version"}
        return cls(data, rows, cols, meta)

    def dumps(self, fmt: str = "dense") -> str:
        # repr of a float round-trips exactly through json
        return json.dumps(self.to_document(fmt), indent=1)

    @classmethod
    def loads(cls, text: str) -> LabeledMatrix:
        return cls.from_document(json.loads(text))
