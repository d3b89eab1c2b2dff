"""Permanent, human-meaningful identifiers with round-trip guarantees.

Three families:

- number fields     "3.1.23.1"   degree . r1 . |disc| . index
- elliptic curves   "5077a1"     conductor + isogeny class + curve number,
                    also the URL style "5077/a/1"; the class string is
                    bijective base 26 (a=1 .. z=26, ba=53, ...)
- characters        "4.2"        modulus . index, the index being the
                    1-based lexicographic rank of the exponent vector over
                    the fixed generator basis

parse(format(x)) and format(parse(text)) are exact inverses on valid
inputs; everything invalid raises LabelError.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .arith.characters import DirichletCharacter, character_from_exponents, unit_group
from .arith.primes import euler_phi


class LabelError(ValueError):
    """Malformed or inconsistent label text."""


# ---------------------------------------------------------------- number fields

_NF_RE = re.compile(r"^(\d+)\.(\d+)\.(\d+)\.(\d+)$")


@dataclass(frozen=True)
class NumberFieldLabel:
    degree: int
    r1: int
    abs_disc: int
    index: int

    def __post_init__(self) -> None:
        if self.degree < 1 or self.abs_disc < 1 or self.index < 1 or self.r1 < 0:
            raise LabelError(f"number-field label components out of range: {self}")
        if self.r1 > self.degree:
            raise LabelError(f"r1 = {self.r1} exceeds degree {self.degree}")
        if (self.r1 - self.degree) % 2 != 0:
            raise LabelError(
                f"r1 = {self.r1} and degree {self.degree} differ in parity")


def parse_nf_label(text: str) -> NumberFieldLabel:
    m = _NF_RE.match(text)
    if not m:
        raise LabelError(f"malformed number-field label {text!r}")
    return NumberFieldLabel(*(int(g) for g in m.groups()))


def format_nf_label(label: NumberFieldLabel) -> str:
    return f"{label.degree}.{label.r1}.{label.abs_disc}.{label.index}"


# ---------------------------------------------------------------- elliptic curves

_EC_COMPACT_RE = re.compile(r"^(\d+)([a-z]+)(\d+)$")
_EC_URL_RE = re.compile(r"^(\d+)/([a-z]+)/(\d+)$")


@dataclass(frozen=True)
class ECLabelQ:
    conductor: int
    isogeny_class: str
    curve_number: int

    def __post_init__(self) -> None:
        if self.conductor < 1 or self.curve_number < 1:
            raise LabelError(f"curve label components out of range: {self}")
        if not self.isogeny_class or not re.fullmatch(r"[a-z]+", self.isogeny_class):
            raise LabelError(
                f"isogeny class {self.isogeny_class!r} must be lowercase a-z")


def isogeny_class_index(letters: str) -> int:
    """Bijective base-26 value: a=1, z=26, ba=53, bb=54, ..."""
    if not re.fullmatch(r"[a-z]+", letters or ""):
        raise LabelError(f"bad isogeny class {letters!r}")
    value = 0
    for ch in letters:
        value = value * 26 + (ord(ch) - ord("a") + 1)
    return value


def isogeny_class_letters(index: int) -> str:
    """Inverse of isogeny_class_index (index >= 1)."""
    if index < 1:
        raise LabelError("isogeny class index starts at 1")
    out = []
    while index > 0:
        index, rem = divmod(index - 1, 26)
        out.append(chr(ord("a") + rem))
    return "".join(reversed(out))


def parse_ec_label(text: str) -> ECLabelQ:
    m = _EC_COMPACT_RE.match(text) or _EC_URL_RE.match(text)
    if not m:
        raise LabelError(f"malformed elliptic-curve label {text!r}")
    cond, iso, num = m.groups()
    return ECLabelQ(int(cond), iso, int(num))


def format_ec_label(label: ECLabelQ, style: str = "compact") -> str:
    if style == "compact":
        return f"{label.conductor}{label.isogeny_class}{label.curve_number}"
    if style == "url":
        return f"{label.conductor}/{label.isogeny_class}/{label.curve_number}"
    raise LabelError(f"unknown elliptic-curve label style {style!r}")


# ---------------------------------------------------------------- characters

_CHAR_RE = re.compile(r"^(\d+)\.(\d+)$")


@dataclass(frozen=True)
class CharacterLabel:
    modulus: int
    index: int

    def __post_init__(self) -> None:
        if self.modulus < 1 or self.index < 1:
            raise LabelError(f"character label components out of range: {self}")
        if self.index > euler_phi(self.modulus):
            raise LabelError(
                f"index {self.index} exceeds phi({self.modulus}) = "
                f"{euler_phi(self.modulus)}")


def parse_character_label(text: str) -> CharacterLabel:
    m = _CHAR_RE.match(text)
    if not m:
        raise LabelError(f"malformed character label {text!r}")
    return CharacterLabel(int(m.group(1)), int(m.group(2)))


def format_character_label(label: CharacterLabel) -> str:
    return f"{label.modulus}.{label.index}"


def character_label(chi: DirichletCharacter) -> CharacterLabel:
    """Label of chi: 1-based lexicographic rank of its exponent vector.

    The rank is the mixed-radix value of the vector over the generator
    orders, so the principal (all-zero) character is always "N.1"."""
    orders = unit_group(chi.modulus).orders
    rank = 0
    for c, s in zip(chi.exponents, orders):
        rank = rank * s + c
    return CharacterLabel(chi.modulus, rank + 1)


def character_from_label(label: CharacterLabel) -> DirichletCharacter:
    """Inverse lookup; raises LookupError for an out-of-range index."""
    orders = unit_group(label.modulus).orders
    total = euler_phi(label.modulus)
    if not 1 <= label.index <= total:
        raise LookupError(
            f"character index {label.index} out of range 1..{total} "
            f"for modulus {label.modulus}")
    rank = label.index - 1
    exps = []
    for s in reversed(orders):
        rank, c = divmod(rank, s)
        exps.append(c)
    return character_from_exponents(label.modulus, tuple(reversed(exps)))
