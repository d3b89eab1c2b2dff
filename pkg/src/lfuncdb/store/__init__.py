"""Schemaless, label-keyed record collections with plain-text durability."""

from .collection import (
    Collection,
    Filter,
    NotFoundError,
    UnsupportedFilterError,
    ValidationError,
    validate_record,
)
from .db import Store, StoreLockedError, WriterLock, write_locked_by_other
from .encoding import (
    MAX_DIGITS,
    SortableIntError,
    decode_sortable_int,
    encode_sortable_int,
)
from .textio import FORMATS, CollectionFormat, IngestError, dump_lines, parse_lines

__all__ = [
    "FORMATS",
    "MAX_DIGITS",
    "Collection",
    "CollectionFormat",
    "Filter",
    "IngestError",
    "NotFoundError",
    "SortableIntError",
    "Store",
    "StoreLockedError",
    "UnsupportedFilterError",
    "ValidationError",
    "WriterLock",
    "decode_sortable_int",
    "dump_lines",
    "encode_sortable_int",
    "parse_lines",
    "validate_record",
]
