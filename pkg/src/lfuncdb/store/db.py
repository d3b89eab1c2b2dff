"""The record store: collections, durability, and the single-writer rule.

Text dumps are the source of truth (one file per collection, the formats
in textio); between compactions, writes append to a JSON-lines log, so a
store directory is always reconstructable from plain text.  Readers are
unrestricted; write access to a directory is guarded by a pid lock file,
one writer process at a time.
"""

from __future__ import annotations

import json
import os
import threading
from pathlib import Path

from .collection import Collection, Filter, NotFoundError
from .textio import FORMATS, IngestError, dump_lines, parse_lines

LOCK_FILENAME = ".writer.lock"


class StoreLockedError(RuntimeError):
    """Another process holds the writer lock on this data directory."""


class WriterLock:
    """Exclusive pid-file lock on a store directory."""

    def __init__(self, root: Path):
        self.path = Path(root) / LOCK_FILENAME
        self._held = False

    def acquire(self) -> "WriterLock":
        self.path.parent.mkdir(parents=True, exist_ok=True)
        try:
            fd = os.open(self.path, os.O_CREAT | os.O_EXCL | os.O_WRONLY)
        except FileExistsError:
            raise StoreLockedError(
                f"writer lock held (pid {self.path.read_text().strip() or '?'}) "
                f"at {self.path}") from None
        with os.fdopen(fd, "w") as fh:
            fh.write(str(os.getpid()))
        self._held = True
        return self

    def release(self) -> None:
        if self._held:
            self.path.unlink(missing_ok=True)
            self._held = False

    def __enter__(self) -> "WriterLock":
        return self.acquire()

    def __exit__(self, *exc) -> None:
        self.release()


def write_locked_by_other(root: Path) -> bool:
    """True when some other process holds the directory's writer lock."""
    path = Path(root) / LOCK_FILENAME
    if not path.exists():
        return False
    try:
        return int(path.read_text().strip()) != os.getpid()
    except ValueError:
        return True


class Store:
    """Collections plus durability; in-memory when no directory is given.

    A single re-entrant lock serializes writes and snapshots reads per
    store instance; cross-collection operations carry no transactional
    guarantee beyond that.
    """

    def __init__(self, root: str | Path | None = None):
        self.root = Path(root) if root is not None else None
        self._lock = threading.RLock()
        self.collections: dict[str, Collection] = {}
        if self.root is not None:
            self.root.mkdir(parents=True, exist_ok=True)
            self._load()

    # ------------------------------------------------------------ plumbing

    def _dump_path(self, name: str) -> Path:
        assert self.root is not None
        return self.root / f"{name}.txt"

    def _log_path(self, name: str) -> Path:
        assert self.root is not None
        return self.root / f"{name}.log"

    def _load(self) -> None:
        for name, fmt in FORMATS.items():
            dump = self._dump_path(name)
            log = self._log_path(name)
            if not dump.exists() and not log.exists():
                continue
            coll = fmt.new_collection()
            if dump.exists():
                lines = dump.read_text(encoding="utf-8").splitlines()
                for record in parse_lines(lines, fmt):
                    coll.put(record)
            if log.exists():
                with log.open(encoding="utf-8") as fh:
                    for raw in fh:
                        if not raw.strip():
                            continue
                        entry = json.loads(raw)
                        if entry["op"] == "put":
                            coll.put(entry["record"])
                        elif entry["op"] == "delete":
                            try:
                                coll.delete(entry["label"])
                            except NotFoundError:
                                pass
            self.collections[name] = coll

    def collection(self, name: str) -> Collection:
        with self._lock:
            if name not in self.collections:
                if name not in FORMATS:
                    raise KeyError(f"unknown collection {name!r}")
                self.collections[name] = FORMATS[name].new_collection()
            return self.collections[name]

    def _append_log(self, name: str, entry: dict) -> None:
        if self.root is None:
            return
        with self._log_path(name).open("a", encoding="utf-8") as fh:
            fh.write(json.dumps(entry, separators=(",", ":"), sort_keys=True) + "\n")

    # ------------------------------------------------------------- records

    def put(self, name: str, record: dict) -> None:
        with self._lock:
            self.collection(name).put(record)
            self._append_log(name, {"op": "put", "record": record})

    def get(self, name: str, label: str) -> dict:
        with self._lock:
            return self.collection(name).get(label)

    def delete(self, name: str, label: str) -> None:
        with self._lock:
            self.collection(name).delete(label)
            self._append_log(name, {"op": "delete", "label": label})

    def query(self, name: str, filters: list[Filter] | None = None,
              sort: str | None = None, limit: int | None = None,
              offset: int = 0) -> list[dict]:
        with self._lock:
            return self.collection(name).query(filters, sort, limit, offset)

    def count(self, name: str) -> int:
        with self._lock:
            return len(self.collection(name))

    # ---------------------------------------------------------- text files

    def ingest_text(self, name: str, path: str | Path) -> int:
        """Atomically ingest a text file into a collection.

        The whole file is parsed and checked (including duplicate labels,
        against the file and the existing collection) before anything is
        applied; on any error the collection is untouched.
        """
        fmt = FORMATS.get(name)
        if fmt is None:
            raise KeyError(f"unknown collection {name!r}")
        lines = Path(path).read_text(encoding="utf-8").splitlines()
        records = parse_lines(lines, fmt)
        with self._lock:
            coll = self.collection(name)
            for record in records:
                if record["label"] in coll.records:
                    raise IngestError(
                        f"label {record['label']!r} already present in collection")
            for record in records:
                coll.put(record)
                self._append_log(name, {"op": "put", "record": record})
        return len(records)

    def dump_text(self, name: str) -> str:
        """Deterministic, label-sorted text dump of a collection."""
        fmt = FORMATS.get(name)
        if fmt is None:
            raise KeyError(f"unknown collection {name!r}")
        with self._lock:
            lines = dump_lines(self.collection(name), fmt)
        return "\n".join(lines) + ("\n" if lines else "")

    def compact(self) -> None:
        """Fold the append logs into fresh text dumps."""
        if self.root is None:
            return
        with self._lock:
            for name, coll in self.collections.items():
                if len(coll) == 0 and not self._dump_path(name).exists():
                    continue
                self._dump_path(name).write_text(
                    self.dump_text(name), encoding="utf-8")
                self._log_path(name).unlink(missing_ok=True)

    def is_built(self) -> bool:
        """A directory counts as built when any collection has records."""
        return any(len(c) > 0 for c in self.collections.values())
