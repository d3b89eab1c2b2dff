"""Sortable text keys for arbitrarily large integers.

Record fields whose integers may outgrow machine words are stored as
decimal strings; range searches then need a companion key whose
lexicographic order equals numeric order:

    n >= 0:  "p" + 4-digit zero-padded digit count + digits
    n <  0:  "n" + 4-digit zero-padded (10000 - digit count)
                 + nines-complement digits

e.g. 23 -> "p000223", -23 -> "n999876".  The length prefix makes longer
magnitudes sort after shorter ones; the nines complement reverses digit
order for negatives; "n" < "p" puts all negatives first.  The 4-digit
prefix caps magnitudes at 9999 decimal digits.
"""

from __future__ import annotations

import re

_DECIMAL_RE = re.compile(r"^-?\d+$")
MAX_DIGITS = 9999


class SortableIntError(ValueError):
    """Input is not a decimal integer or does not fit the key format."""


def _canonical(text: str, sign: int) -> tuple[int, str]:
    if not isinstance(text, str) or not _DECIMAL_RE.match(text):
        raise SortableIntError(f"not a decimal integer string: {text!r}")
    if text.startswith("-"):
        sign = -sign
        text = text[1:]
    digits = text.lstrip("0") or "0"
    if digits == "0":
        sign = 1
    if len(digits) > MAX_DIGITS:
        raise SortableIntError(
            f"magnitude has {len(digits)} digits; the key format caps at {MAX_DIGITS}")
    return sign, digits


def encode_sortable_int(text: str, sign: int = 1) -> str:
    """Key text for the signed decimal integer; sign may also ride on text."""
    if sign not in (1, -1):
        raise SortableIntError(f"sign must be +1 or -1, got {sign}")
    sign, digits = _canonical(text, sign)
    if sign > 0:
        return f"p{len(digits):04d}{digits}"
    complement = "".join(str(9 - int(d)) for d in digits)
    return f"n{10000 - len(digits):04d}{complement}"


def decode_sortable_int(key: str) -> str:
    """Inverse of encode_sortable_int; returns the signed decimal string."""
    if len(key) < 6 or key[0] not in "pn" or not key[1:].isdigit():
        raise SortableIntError(f"malformed sortable key {key!r}")
    prefix = int(key[1:5])
    body = key[5:]
    if key[0] == "p":
        count = prefix
        if len(body) != count:
            raise SortableIntError(f"length prefix mismatch in {key!r}")
        return body.lstrip("0") or "0"
    count = 10000 - prefix
    if len(body) != count:
        raise SortableIntError(f"length prefix mismatch in {key!r}")
    digits = "".join(str(9 - int(d)) for d in body)
    return "-" + (digits.lstrip("0") or "0")
