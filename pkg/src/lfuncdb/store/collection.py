"""Label-keyed record collections with secondary indexes and range queries.

Records are plain dicts with a mandatory unique "label" key; other fields
are schemaless.  Value kinds: text, int (must fit 64 bits signed; larger
integers belong in text fields), float, bool, lists of values, nested
string-keyed maps.

Indexes come in two flavours:
- "plain"    hash buckets on the value (list fields bucket per element,
             serving the contains filter)
- "bigint"   sorted sortable-int keys over decimal-text fields, serving
             numeric range filters on unbounded integers

Query results always equal what a linear scan would produce; indexes are
only a shortcut, and a range filter over a text field without a bigint
index is refused outright rather than silently scanned lexicographically.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass

from .encoding import SortableIntError, encode_sortable_int

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


class ValidationError(ValueError):
    """Record shape or value kinds unacceptable to the store."""


class NotFoundError(KeyError):
    """No record under that label."""


class UnsupportedFilterError(ValueError):
    """Filter needs an index that the collection does not declare."""


def validate_value(value, path: str) -> None:
    if isinstance(value, bool) or value is None:
        return
    if isinstance(value, int):
        if not INT64_MIN <= value <= INT64_MAX:
            raise ValidationError(
                f"{path}: integer {value} exceeds 64 bits; store it as text")
        return
    if isinstance(value, (float, str)):
        return
    if isinstance(value, (list, tuple)):
        for i, item in enumerate(value):
            validate_value(item, f"{path}[{i}]")
        return
    if isinstance(value, dict):
        for k, v in value.items():
            if not isinstance(k, str):
                raise ValidationError(f"{path}: map keys must be text, got {k!r}")
            validate_value(v, f"{path}.{k}")
        return
    raise ValidationError(f"{path}: unsupported value type {type(value).__name__}")


def validate_record(record: dict) -> str:
    if not isinstance(record, dict):
        raise ValidationError("record must be a map")
    label = record.get("label")
    if not isinstance(label, str) or not label:
        raise ValidationError("record must carry a non-empty text 'label'")
    for name, value in record.items():
        if not isinstance(name, str):
            raise ValidationError(f"field names must be text, got {name!r}")
        validate_value(value, name)
    return label


@dataclass(frozen=True)
class Filter:
    """One conjunct of a query."""

    op: str           # "eq" | "range" | "contains"
    field: str
    value: object = None
    low: object = None
    high: object = None

    @staticmethod
    def eq(field: str, value) -> "Filter":
        return Filter("eq", field, value=value)

    @staticmethod
    def range(field: str, low, high) -> "Filter":
        return Filter("range", field, low=low, high=high)

    @staticmethod
    def contains(field: str, value) -> "Filter":
        return Filter("contains", field, value=value)


def _as_decimal_text(value) -> str:
    if isinstance(value, bool):
        raise SortableIntError("booleans are not integers here")
    if isinstance(value, int):
        return str(value)
    if isinstance(value, str):
        return value
    raise SortableIntError(f"cannot read {value!r} as a decimal integer")


def _hashable(value):
    return value if not isinstance(value, (list, dict)) else None


def _copy_value(value):
    if isinstance(value, list):
        return [_copy_value(v) for v in value]
    if isinstance(value, dict):
        return {k: _copy_value(v) for k, v in value.items()}
    return value


def _copy_record(record: dict) -> dict:
    """Structural copy; store values are scalars, lists and maps only."""
    return {k: _copy_value(v) for k, v in record.items()}


class Collection:
    """One named set of records plus its declared indexes.

    index_specs maps field name -> "plain" | "bigint".  Writers must hold
    the owning store's lock; reads take consistent snapshots there too.
    """

    def __init__(self, name: str, index_specs: dict[str, str] | None = None):
        self.name = name
        self.index_specs: dict[str, str] = dict(index_specs or {})
        self.records: dict[str, dict] = {}
        self._plain: dict[str, dict[object, set[str]]] = {
            f: {} for f, kind in self.index_specs.items() if kind == "plain"
        }
        self._bigint: dict[str, list[tuple[str, str]]] = {
            f: [] for f, kind in self.index_specs.items() if kind == "bigint"
        }
        # per-field count of non-numeric values, so range-filter support is
        # decided in O(1) instead of scanning the whole collection
        self._nonnumeric: dict[str, int] = {}

    # ------------------------------------------------------------- mutation

    def put(self, record: dict) -> None:
        label = validate_record(record)
        if label in self.records:
            self._unindex(self.records[label])
        stored = _copy_record(record)
        self.records[label] = stored
        self._index(stored)

    def delete(self, label: str) -> None:
        if label not in self.records:
            raise NotFoundError(label)
        self._unindex(self.records.pop(label))

    def _index(self, record: dict) -> None:
        label = record["label"]
        for fname, value in record.items():
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                self._nonnumeric[fname] = self._nonnumeric.get(fname, 0) + 1
        for fname, buckets in self._plain.items():
            if fname not in record:
                continue
            value = record[fname]
            for v in value if isinstance(value, list) else [value]:
                key = _hashable(v)
                buckets.setdefault(key, set()).add(label)
        for fname, keys in self._bigint.items():
            if fname not in record:
                continue
            key = encode_sortable_int(_as_decimal_text(record[fname]))
            bisect.insort(keys, (key, label))

    def _unindex(self, record: dict) -> None:
        label = record["label"]
        for fname, value in record.items():
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                self._nonnumeric[fname] -= 1
        for fname, buckets in self._plain.items():
            if fname not in record:
                continue
            value = record[fname]
            for v in value if isinstance(value, list) else [value]:
                key = _hashable(v)
                bucket = buckets.get(key)
                if bucket:
                    bucket.discard(label)
                    if not bucket:
                        del buckets[key]
        for fname, keys in self._bigint.items():
            if fname not in record:
                continue
            key = encode_sortable_int(_as_decimal_text(record[fname]))
            i = bisect.bisect_left(keys, (key, label))
            if i < len(keys) and keys[i] == (key, label):
                keys.pop(i)

    # --------------------------------------------------------------- access

    def get(self, label: str) -> dict:
        if label not in self.records:
            raise NotFoundError(label)
        return _copy_record(self.records[label])

    def __len__(self) -> int:
        return len(self.records)

    def labels(self) -> list[str]:
        return sorted(self.records)

    # ---------------------------------------------------------------- query

    def _matches(self, record: dict, flt: Filter) -> bool:
        if flt.field not in record:
            return False
        value = record[flt.field]
        if flt.op == "eq":
            return value == flt.value
        if flt.op == "contains":
            return isinstance(value, list) and flt.value in value
        if flt.op == "range":
            if self.index_specs.get(flt.field) == "bigint":
                key = encode_sortable_int(_as_decimal_text(value))
                lo = encode_sortable_int(_as_decimal_text(flt.low))
                hi = encode_sortable_int(_as_decimal_text(flt.high))
                return lo <= key <= hi
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise UnsupportedFilterError(
                    f"range filter on {flt.field!r} needs a sortable-big-int "
                    f"index or numeric values")
            return flt.low <= value <= flt.high
        raise UnsupportedFilterError(f"unknown filter op {flt.op!r}")

    def _candidates(self, filters: list[Filter]):
        """Smallest indexed candidate set (always a superset of the exact
        answer; every filter is re-verified on it), or all labels."""
        best = None
        for flt in filters:
            if (
                flt.op in ("eq", "contains")
                and flt.field in self._plain
                and not isinstance(flt.value, (list, dict))
            ):
                bucket = self._plain[flt.field].get(flt.value, set())
                if best is None or len(bucket) < len(best):
                    best = bucket
            elif flt.op == "range" and flt.field in self._bigint:
                keys = self._bigint[flt.field]
                lo = encode_sortable_int(_as_decimal_text(flt.low))
                hi = encode_sortable_int(_as_decimal_text(flt.high))
                i = bisect.bisect_left(keys, (lo, ""))
                j = bisect.bisect_right(keys, (hi, "￿"))
                bucket = {label for _, label in keys[i:j]}
                if best is None or len(bucket) < len(best):
                    best = bucket
        return self.records.keys() if best is None else best

    def _sort_key(self, sort_field: str | None):
        bigint = sort_field in self._bigint if sort_field else False

        def key(label: str):
            if sort_field is None:
                return ("", label)
            record = self.records[label]
            if sort_field not in record:
                return (2, "", label)
            value = record[sort_field]
            if bigint:
                return (0, encode_sortable_int(_as_decimal_text(value)), label)
            if isinstance(value, bool):
                value = int(value)
            if isinstance(value, (int, float)):
                return (0, (0, float(value)), label)
            return (1, (1, str(value)), label)

        return key

    def query(
        self,
        filters: list[Filter] | None = None,
        sort: str | None = None,
        limit: int | None = None,
        offset: int = 0,
    ) -> list[dict]:
        """Conjunctive filter evaluation; equals the linear-scan answer.

        Results are stably ordered by the sort field (missing-field records
        last) then label; plain label order when no sort is given.
        """
        filters = list(filters or [])
        self._check_range_support(filters)
        out = [
            label
            for label in self._candidates(filters)
            if all(self._matches(self.records[label], f) for f in filters)
        ]
        out.sort(key=self._sort_key(sort))
        if offset:
            out = out[offset:]
        if limit is not None:
            out = out[:limit]
        return [_copy_record(self.records[label]) for label in out]

    def _check_range_support(self, filters: list[Filter]) -> None:
        """Refuse range filters over text values without a bigint index,
        regardless of which records an index shortcut would visit."""
        for flt in filters:
            if flt.op != "range" or flt.field in self._bigint:
                continue
            if self._nonnumeric.get(flt.field, 0) > 0:
                raise UnsupportedFilterError(
                    f"range filter on field {flt.field!r} requires a "
                    f"sortable-big-int index (non-numeric values present)")

    def scan_query(self, filters=None, sort=None, limit=None, offset=0) -> list[dict]:
        """Reference evaluation ignoring all indexes (oracle for tests)."""
        filters = list(filters or [])
        self._check_range_support(filters)
        out = [
            label
            for label, record in self.records.items()
            if all(self._matches(record, f) for f in filters)
        ]
        out.sort(key=self._sort_key(sort))
        if offset:
            out = out[offset:]
        if limit is not None:
            out = out[:limit]
        return [_copy_record(self.records[label]) for label in out]
