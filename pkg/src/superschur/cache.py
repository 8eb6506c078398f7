"""On-disk cache of super-Schur blocks.

One JSON file per (type, bidegree) block, tagged with a format version and
written by atomic whole-file replacement, so concurrent writers can only ever
leave a complete file behind.  The directory is passed in explicitly.
"""
from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

from .bases import SchurTable, SchurType
from .superalgebra import SuperPolynomial
from .superpartitions import SuperPartition, enumerate_superpartitions

FORMAT_TAG = "superschur-block/1"


class DiskBackedTable(SchurTable):
    """A :class:`SchurTable` that persists whole blocks under ``directory``."""

    def __init__(self, directory: str | os.PathLike, max_total: int | None = None,
                 max_fermionic: int | None = None):
        super().__init__(max_total, max_fermionic)
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)
        self._loaded: set[tuple[SchurType, tuple[int, int]]] = set()

    def path(self, kind: SchurType, bidegree: tuple[int, int]) -> Path:
        n, m = bidegree
        return self.directory / f"{kind.value}-{n}-{m}.json"

    def _load(self, kind: SchurType, bidegree: tuple[int, int]) -> bool:
        key = (kind, bidegree)
        if key in self._loaded:
            return True
        path = self.path(kind, bidegree)
        try:
            data = json.loads(path.read_text())
        except (OSError, ValueError):
            return False
        if data.get("format") != FORMAT_TAG:
            return False
        for entry in data["entries"]:
            sp = SuperPartition.from_json(entry["superpartition"])
            self._entries[(kind, sp)] = SuperPolynomial.from_json(entry["terms"])
        self._loaded.add(key)
        return True

    def _save(self, kind: SchurType, bidegree: tuple[int, int]) -> None:
        entries = [{"superpartition": sp.to_json(), "terms": self._entries[(kind, sp)].to_json()}
                   for sp in enumerate_superpartitions(*bidegree)]
        payload = json.dumps({"format": FORMAT_TAG, "type": kind.value,
                              "bidegree": list(bidegree), "entries": entries}, sort_keys=True)
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as handle:
                handle.write(payload)
            os.replace(tmp, self.path(kind, bidegree))
        except BaseException:
            Path(tmp).unlink(missing_ok=True)
            raise
        self._loaded.add((kind, bidegree))

    def get(self, kind: SchurType, sp: SuperPartition) -> SuperPolynomial:
        if (kind, sp) not in self._entries:
            self._load(kind, sp.bidegree)
        return super().get(kind, sp)

    def block(self, kind: SchurType, bidegree: tuple[int, int]) -> dict[SuperPartition, SuperPolynomial]:
        self._check(bidegree)
        if self._load(kind, bidegree):
            return super().block(kind, bidegree)
        out = super().block(kind, bidegree)
        self._save(kind, bidegree)
        return out
