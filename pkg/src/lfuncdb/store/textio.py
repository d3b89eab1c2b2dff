"""Plain-text line formats: the source of truth for every collection.

One record per line, UTF-8, fields separated by "|", list items by ",",
map entries by ";" with "=" between key and value.  Text cells escape the
separator characters (backslash escapes), so arbitrary content survives
the round trip; dumps are label-sorted and deterministic, and a dump can
always be ingested back into an equal collection.

Declared formats:

  number_fields      label|coeffs|disc_sign|disc_abs|class_number|
                     class_group|galois_n,galois_t|signature|ramps
  elliptic_curves_q  label|a1,a2,a3,a4,a6|conductor|rank|torsion_structure
  characters         label|modulus|exponent_vector|conductor|parity|order
  zeros              lfunction_label|ordinate_decimal|precision_exponent
  lfunctions         label|kind|degree|conductor|weight|parity|self_dual|
                     root_re|root_im|critical_line|origin|coeffs
  knowls             knowl_id|version|author|timestamp|title|content

Every line may carry one extra trailing cell: a map of additional fields
(the flexible-schema escape hatch; nested values are JSON-encoded there).
Some fields are derived at ingestion (degree from coeffs, a synthetic
label for zeros, float ordinates) and re-derived rather than stored.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable

from .collection import Collection

_ESCAPE_CODES = {"\\": "\\\\", "|": "\\p", ",": "\\c", ";": "\\s", "=": "\\e", "\n": "\\n"}
_UNESCAPES = {v[1]: k for k, v in _ESCAPE_CODES.items()}

# each nesting level escapes only the separators it actually splits on, so
# e.g. a text cell keeps its commas verbatim (only list cells split on them)
_CELL_SPECIALS = "\\|\n"
_ITEM_SPECIALS = "\\|\n,"
_MAP_SPECIALS = "\\|\n;="


class IngestError(ValueError):
    """Malformed ingest input; carries the offending 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


def _escape(text: str, specials: str) -> str:
    return "".join(_ESCAPE_CODES[ch] if ch in specials else ch for ch in text)


def escape_text(text: str) -> str:
    return _escape(text, _CELL_SPECIALS)


def unescape_text(text: str) -> str:
    """Universal inverse for every escaping level."""
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\\":
            if i + 1 >= len(text) or text[i + 1] not in _UNESCAPES:
                raise ValueError(f"dangling escape in {text!r}")
            out.append(_UNESCAPES[text[i + 1]])
            i += 2
        else:
            out.append(ch)
            i += 1
    return "".join(out)


def _split_unescaped(text: str, sep: str) -> list[str]:
    parts, buf, i = [], [], 0
    while i < len(text):
        ch = text[i]
        if ch == "\\" and i + 1 < len(text):
            buf.append(text[i : i + 2])
            i += 2
            continue
        if ch == sep:
            parts.append("".join(buf))
            buf = []
        else:
            buf.append(ch)
        i += 1
    parts.append("".join(buf))
    return parts


# ------------------------------------------------------------- cell codecs

def _enc_text(v) -> str:
    if not isinstance(v, str):
        raise ValueError(f"expected text, got {v!r}")
    return _escape(v, _CELL_SPECIALS)


def _enc_text_item(v) -> str:
    if not isinstance(v, str):
        raise ValueError(f"expected text, got {v!r}")
    return _escape(v, _ITEM_SPECIALS)


def _dec_text(cell: str):
    return unescape_text(cell)


def _enc_int(v) -> str:
    if isinstance(v, bool) or not isinstance(v, int):
        raise ValueError(f"expected integer, got {v!r}")
    return str(v)


def _dec_int(cell: str):
    try:
        return int(cell)
    except ValueError:
        raise ValueError(f"expected integer, got {cell!r}") from None


def _enc_float(v) -> str:
    if not isinstance(v, (int, float)) or isinstance(v, bool):
        raise ValueError(f"expected float, got {v!r}")
    return repr(float(v))


def _dec_float(cell: str):
    try:
        return float(cell)
    except ValueError:
        raise ValueError(f"expected float, got {cell!r}") from None


def _enc_bool(v) -> str:
    if not isinstance(v, bool):
        raise ValueError(f"expected boolean, got {v!r}")
    return "true" if v else "false"


def _dec_bool(cell: str):
    if cell == "true":
        return True
    if cell == "false":
        return False
    raise ValueError(f"expected true/false, got {cell!r}")


def _enc_list(item_enc: Callable) -> Callable:
    def enc(v) -> str:
        if not isinstance(v, (list, tuple)):
            raise ValueError(f"expected list, got {v!r}")
        return ",".join(item_enc(item) for item in v)

    return enc


def _dec_list(item_dec: Callable) -> Callable:
    def dec(cell: str):
        if cell == "":
            return []
        return [item_dec(part) for part in _split_unescaped(cell, ",")]

    return dec


def _enc_galois(v) -> str:
    if not isinstance(v, dict) or set(v) != {"n", "t"}:
        raise ValueError(f"expected a galois pair map with keys n, t, got {v!r}")
    return f"{_enc_int(v['n'])},{_enc_int(v['t'])}"


def _dec_galois(cell: str):
    parts = _split_unescaped(cell, ",")
    if len(parts) != 2:
        raise ValueError(f"galois pair needs two integers, got {cell!r}")
    return {"n": _dec_int(parts[0]), "t": _dec_int(parts[1])}


_KINDS: dict[str, tuple[Callable, Callable]] = {
    "text": (_enc_text, _dec_text),
    "int": (_enc_int, _dec_int),
    "float": (_enc_float, _dec_float),
    "bool": (_enc_bool, _dec_bool),
    "text_list": (_enc_list(_enc_text_item), _dec_list(_dec_text)),
    "int_list": (_enc_list(_enc_int), _dec_list(_dec_int)),
    "float_list": (_enc_list(_enc_float), _dec_list(_dec_float)),
    "galois_pair": (_enc_galois, _dec_galois),
}


@dataclass(frozen=True)
class Column:
    """One cell of a line; maps to a same-named record field."""

    name: str
    kind: str
    required: bool = True


def _extras_encode(record: dict, declared: set[str]) -> str:
    extras = {k: record[k] for k in sorted(record) if k not in declared}
    if not extras:
        return ""
    parts = []
    for k, v in extras.items():
        # values are always JSON inside the extras map: unambiguous types
        cell = _escape(json.dumps(v, separators=(",", ":"), sort_keys=True), _MAP_SPECIALS)
        parts.append(f"{_escape(k, _MAP_SPECIALS)}={cell}")
    return ";".join(parts)


def _extras_decode(cell: str) -> dict:
    out: dict = {}
    if cell == "":
        return out
    for part in _split_unescaped(cell, ";"):
        pieces = _split_unescaped(part, "=")
        if len(pieces) != 2:
            raise ValueError(f"malformed extras entry {part!r}")
        key = unescape_text(pieces[0])
        raw = unescape_text(pieces[1])
        try:
            out[key] = json.loads(raw)
        except json.JSONDecodeError:
            raise ValueError(f"extras value for {key!r} is not JSON: {raw!r}") from None
    return out


@dataclass(frozen=True)
class CollectionFormat:
    """Columns, indexes and the ingest-time derivation hook of a collection."""

    name: str
    columns: tuple[Column, ...]
    index_specs: dict[str, str]
    derive: Callable[[dict], None] | None = None
    synth_label: Callable[[dict], str] | None = None

    def encode_record(self, record: dict) -> str:
        cells = []
        declared = {c.name for c in self.columns} | set(DERIVED_FIELDS.get(self.name, ()))
        for col in self.columns:
            if col.name not in record:
                if col.required:
                    raise ValueError(f"record missing required field {col.name!r}")
                cells.append("")
                continue
            enc, _ = _KINDS[col.kind]
            cells.append(enc(record[col.name]))
        extras = _extras_encode(record, declared)
        if extras:
            cells.append(extras)
        return "|".join(cells)

    def decode_line(self, line: str) -> dict:
        cells = _split_unescaped(line, "|")
        n_cols = len(self.columns)
        if len(cells) not in (n_cols, n_cols + 1):
            raise ValueError(
                f"expected {n_cols} (or {n_cols}+extras) cells, got {len(cells)}")
        record: dict = {}
        for col, cell in zip(self.columns, cells):
            if cell == "" and not col.required:
                continue
            _, dec = _KINDS[col.kind]
            record[col.name] = dec(cell)
        if len(cells) == n_cols + 1:
            record.update(_extras_decode(cells[n_cols]))
        if self.synth_label is not None:
            record["label"] = self.synth_label(record)
        if self.derive is not None:
            self.derive(record)
        return record

    def new_collection(self) -> Collection:
        return Collection(self.name, self.index_specs)


# ------------------------------------------------------ derivation helpers

def _derive_number_field(record: dict) -> None:
    coeffs = record.get("coeffs", "")
    parts = [p for p in coeffs.split(",") if p != ""]
    try:
        ints = [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"coeffs must be a comma list of integers, got {coeffs!r}")
    if len(ints) < 2:
        raise ValueError("minimal polynomial needs degree >= 1")
    if ints[-1] == 0:
        raise ValueError("leading coefficient must be nonzero")
    record["degree"] = len(ints) - 1
    if record.get("disc_sign") not in (1, -1):
        raise ValueError(f"disc_sign must be +-1, got {record.get('disc_sign')!r}")
    galois = record.get("galois", {})
    record["galois_n"] = galois.get("n")
    record["galois_t"] = galois.get("t")


def _derive_curve(record: dict) -> None:
    if len(record.get("ainvs", [])) != 5:
        raise ValueError("ainvs must list exactly a1,a2,a3,a4,a6")


def _derive_zero(record: dict) -> None:
    record["ordinate"] = float(record["ordinate_decimal"])
    if record["ordinate"] < 0:
        raise ValueError("zero ordinates are nonnegative")


def _zero_label(record: dict) -> str:
    return f"{record['lfunction_label']}@{float(record['ordinate_decimal']):018.10f}"


def _knowl_label(record: dict) -> str:
    return f"{record['knowl_id']}@v{record['version']:06d}"


DERIVED_FIELDS = {
    "number_fields": ("degree", "galois_n", "galois_t"),
    "characters": ("primitive",),
    "zeros": ("ordinate", "label"),
    "knowls": ("label",),
}


FORMATS: dict[str, CollectionFormat] = {
    fmt.name: fmt
    for fmt in (
        CollectionFormat(
            name="number_fields",
            columns=(
                Column("label", "text"),
                Column("coeffs", "text"),
                Column("disc_sign", "int"),
                Column("disc_abs", "text"),
                Column("class_number", "int"),
                Column("class_group", "text"),
                Column("galois", "galois_pair"),
                Column("signature", "text"),
                Column("ramps", "text_list"),
            ),
            index_specs={
                "degree": "plain",
                "disc_abs": "bigint",
                "class_number": "plain",
                "galois_n": "plain",
                "galois_t": "plain",
                "signature": "plain",
                "ramps": "plain",
            },
            derive=_derive_number_field,
        ),
        CollectionFormat(
            name="elliptic_curves_q",
            columns=(
                Column("label", "text"),
                Column("ainvs", "int_list"),
                Column("conductor", "text"),
                Column("rank", "int"),
                Column("torsion_structure", "int_list"),
            ),
            index_specs={
                "conductor": "bigint",
                "rank": "plain",
                "torsion_structure": "plain",
            },
            derive=_derive_curve,
        ),
        CollectionFormat(
            name="characters",
            columns=(
                Column("label", "text"),
                Column("modulus", "int"),
                Column("exponent_vector", "int_list"),
                Column("conductor", "int"),
                Column("parity", "int"),
                Column("order", "int"),
            ),
            index_specs={
                "modulus": "plain",
                "conductor": "plain",
                "parity": "plain",
                "order": "plain",
                "primitive": "plain",
            },
            derive=lambda r: r.__setitem__("primitive", r["conductor"] == r["modulus"]),
        ),
        CollectionFormat(
            name="zeros",
            columns=(
                Column("lfunction_label", "text"),
                Column("ordinate_decimal", "text"),
                Column("precision_exponent", "int"),
            ),
            index_specs={"lfunction_label": "plain", "ordinate": "plain"},
            derive=_derive_zero,
            synth_label=_zero_label,
        ),
        CollectionFormat(
            name="lfunctions",
            columns=(
                Column("label", "text"),
                Column("kind", "text"),
                Column("degree", "int"),
                Column("conductor", "text"),
                Column("weight", "int"),
                Column("parity", "int"),
                Column("self_dual", "bool"),
                Column("root_re", "float", required=False),
                Column("root_im", "float", required=False),
                Column("critical_line", "float"),
                Column("zeros_to", "float", required=False),
                Column("origin", "text", required=False),
                Column("coeffs", "text_list"),
            ),
            index_specs={
                "kind": "plain",
                "degree": "plain",
                "conductor": "bigint",
                "origin": "plain",
            },
        ),
        CollectionFormat(
            name="knowls",
            columns=(
                Column("knowl_id", "text"),
                Column("version", "int"),
                Column("author", "text"),
                Column("timestamp", "text"),
                Column("title", "text"),
                Column("content", "text"),
            ),
            index_specs={"knowl_id": "plain", "version": "plain"},
            synth_label=_knowl_label,
        ),
    )
}


def dump_lines(collection: Collection, fmt: CollectionFormat) -> list[str]:
    """Deterministic, label-sorted dump of a collection."""
    drop = set(DERIVED_FIELDS.get(fmt.name, ()))
    lines = []
    for label in collection.labels():
        record = {k: v for k, v in collection.get(label).items() if k not in drop}
        if fmt.synth_label is not None:
            record.pop("label", None)
        lines.append(fmt.encode_record(record))
    return lines


def parse_lines(lines, fmt: CollectionFormat) -> list[dict]:
    """Parse ingest input; any malformed line or duplicate label aborts the
    whole batch (the caller applies records only on full success)."""
    records = []
    seen: dict[str, int] = {}
    for lineno, raw in enumerate(lines, start=1):
        line = raw.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        try:
            record = fmt.decode_line(line)
        except ValueError as exc:
            raise IngestError(str(exc), lineno) from None
        label = record.get("label")
        if not label:
            raise IngestError("record has no label", lineno)
        if label in seen:
            raise IngestError(
                f"duplicate label {label!r} (first seen on line {seen[label]})", lineno)
        seen[label] = lineno
        records.append(record)
    return records
