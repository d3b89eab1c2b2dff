"""Typed object views over the store, catalog builds, the related-objects
graph, and downloadable reconstruction snippets.

Object classes and their permanent identifiers:

  NumberField      "3.1.23.1"                      /api/NumberField/{label}
  EllipticCurve    "5077a1"                        /api/EllipticCurve/Q/{c}/{iso}/{n}
  Character        "4.2"                           /api/Character/Dirichlet/{N}/{j}
  LFunction        URL-path labels, e.g. "Riemann",
                   "Character/Dirichlet/4/2",
                   "EllipticCurve/Q/5077/a/1",
                   "NumberField/2.0.4.1"           /api/L/{label}

Catalog builds write records through the store's serialized writer; the
degree-1 build is complete for all primitive characters up to the chosen
modulus bound, which is the advertised guarantee of the catalog.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import (
    character_group,
    euler_phi,
    is_fundamental_discriminant,
    kronecker_character,
    make_curve,
)
from .arith.elliptic import GOOD, EllipticCurveModel
from .labels import (
    ECLabelQ,
    character_label,
    format_ec_label,
    parse_character_label,
    parse_ec_label,
    parse_nf_label,
)
from .lfunc import (
    KIND_ZETA,
    LFunction,
    character_lfunction,
    coefficient_display,
    dedekind_quadratic,
    ec_lfunction,
    find_zeros,
)
from .store import FORMATS, Filter, NotFoundError, Store

CLASS_NUMBER_FIELD = "NumberField"
CLASS_ELLIPTIC_CURVE = "EllipticCurve"
CLASS_CHARACTER = "Character"
CLASS_LFUNCTION = "LFunction"


def object_url(cls: str, label: str) -> str:
    if cls == CLASS_NUMBER_FIELD:
        return f"/api/NumberField/{label}"
    if cls == CLASS_ELLIPTIC_CURVE:
        ec = parse_ec_label(label)
        return f"/api/EllipticCurve/Q/{format_ec_label(ec, 'url')}"
    if cls == CLASS_CHARACTER:
        cl = parse_character_label(label)
        return f"/api/Character/Dirichlet/{cl.modulus}/{cl.index}"
    if cls == CLASS_LFUNCTION:
        return f"/api/L/{label}"
    raise KeyError(f"unknown object class {cls!r}")


COLLECTION_OF_CLASS = {
    CLASS_NUMBER_FIELD: "number_fields",
    CLASS_ELLIPTIC_CURVE: "elliptic_curves_q",
    CLASS_CHARACTER: "characters",
    CLASS_LFUNCTION: "lfunctions",
}


# ---------------------------------------------------------------- typed views

@dataclass(frozen=True)
class NumberFieldRecord:
    label: str
    coeffs: tuple[int, ...]          # minimal polynomial, low degree first
    degree: int
    disc_sign: int
    abs_disc: str                    # decimal text, arbitrary size
    class_number: int
    class_group: str
    galois_n: int
    galois_t: int
    signature: tuple[int, int]
    ramps: tuple[str, ...]

    def __post_init__(self) -> None:
        if self.degree != len(self.coeffs) - 1:
            raise ValueError(f"{self.label}: degree != len(coeffs) - 1")
        r1, r2 = self.signature
        if r1 + 2 * r2 != self.degree:
            raise ValueError(f"{self.label}: signature {self.signature} "
                             f"inconsistent with degree {self.degree}")
        disc = int(self.abs_disc)
        for p in self.ramps:
            if disc % int(p) != 0:
                raise ValueError(f"{self.label}: ramified prime {p} does not "
                                 f"divide the discriminant")

    @property
    def discriminant_text(self) -> str:
        return ("-" if self.disc_sign < 0 else "") + self.abs_disc


def nf_view(record: dict) -> NumberFieldRecord:
    r1, r2 = (int(x) for x in record["signature"].split(","))
    return NumberFieldRecord(
        label=record["label"],
        coeffs=tuple(int(c) for c in record["coeffs"].split(",")),
        degree=record["degree"],
        disc_sign=record["disc_sign"],
        abs_disc=record["disc_abs"],
        class_number=record["class_number"],
        class_group=record["class_group"],
        galois_n=record["galois"]["n"],
        galois_t=record["galois"]["t"],
        signature=(r1, r2),
        ramps=tuple(record["ramps"]),
    )


@dataclass(frozen=True)
class EllipticCurveRecord:
    label: str
    ec_label: ECLabelQ
    ainvs: tuple[int, int, int, int, int]
    conductor: str                   # decimal text
    rank: int
    torsion_structure: tuple[int, ...]
    historical_note: str | None = None
    lfunction_label: str | None = None

    def __post_init__(self) -> None:
        if str(self.ec_label.conductor) != self.conductor:
            raise ValueError(f"{self.label}: conductor field {self.conductor} "
                             f"does not match the label")

    def curve(self) -> EllipticCurveModel:
        return make_curve(self.ainvs, int(self.conductor))


def ec_view(record: dict) -> EllipticCurveRecord:
    return EllipticCurveRecord(
        label=record["label"],
        ec_label=parse_ec_label(record["label"]),
        ainvs=tuple(record["ainvs"]),
        conductor=record["conductor"],
        rank=record["rank"],
        torsion_structure=tuple(record.get("torsion_structure", [])),
        historical_note=record.get("historical_note"),
        lfunction_label=record.get("lfunction_label"),
    )


@dataclass(frozen=True)
class Relation:
    name: str
    target_class: str
    target_label: str
    target_url: str
    resolved: bool                   # False = "not yet in database"


@dataclass(frozen=True)
class RelatedObjects:
    label: str
    cls: str
    relations: tuple[Relation, ...]


# ------------------------------------------------------------- record makers

def character_store_record(chi, label: str) -> dict:
    return {
        "label": label,
        "modulus": chi.modulus,
        "exponent_vector": list(chi.exponents),
        "conductor": chi.conductor,
        "parity": chi.parity,
        "order": chi.order,
        "primitive": chi.primitive,
    }


def lfunction_store_record(lf: LFunction, label: str, origin: str,
                           zeros_to: float | None = None) -> dict:
    record = {
        "label": label,
        "kind": lf.kind,
        "degree": lf.degree,
        "conductor": str(lf.conductor),
        "weight": lf.weight,
        "parity": lf.parity,
        "self_dual": lf.self_dual,
        "critical_line": lf.critical_line,
        "origin": origin,
        "coeffs": [coefficient_display(c) for c in lf.coefficients[1:]],
    }
    if lf.root_number is not None:
        record["root_re"] = lf.root_number.real
        record["root_im"] = lf.root_number.imag
    if zeros_to is not None:
        # how far the zero table beside this record is complete; homepages
        # default their plot window to it so the two stay consistent
        record["zeros_to"] = float(zeros_to)
    return record


def zero_store_record(lfunction_label: str, ordinate: float) -> dict:
    fmt = FORMATS["zeros"]
    record = {
        "lfunction_label": lfunction_label,
        "ordinate_decimal": f"{ordinate:.10f}",
        "precision_exponent": -8,
    }
    record["label"] = fmt.synth_label(record)
    fmt.derive(record)
    return record


# ------------------------------------------------------------------- builds

def build_character_catalog(
    store: Store,
    max_modulus: int,
    coeff_bound: int = 1000,
    zero_height: float = 30.0,
    zero_step: float = 0.05,
) -> dict[str, int]:
    """Records for every primitive character of modulus <= max_modulus.

    Writes one character record per primitive character (the trivial one
    included, as "1.1"), its L-function record, and scanned zeros for the
    self-dual ones.  Degree-1 completeness within the bound is the
    catalog's guarantee.  Repeated builds are idempotent.
    """
    if max_modulus < 1:
        raise ValueError("max_modulus must be >= 1")
    counts = {"characters": 0, "lfunctions": 0, "zeros": 0}
    for modulus in range(1, max_modulus + 1):
        for chi in character_group(modulus):
            if not chi.primitive:
                continue
            label = f"{modulus}.{character_label(chi).index}"
            store.put("characters", character_store_record(chi, label))
            counts["characters"] += 1

            lf = character_lfunction(chi, coeff_bound)
            lf_label = (
                "Riemann" if lf.kind == KIND_ZETA
                else f"Character/Dirichlet/{modulus}/{character_label(chi).index}"
            )
            store.put("lfunctions", lfunction_store_record(
                lf, lf_label, f"Character:{label}",
                zeros_to=zero_height if lf.self_dual else None))
            counts["lfunctions"] += 1

            if lf.self_dual:
                zeros = find_zeros(lf, 0.0, zero_height, zero_step, label=lf_label)
                for t in zeros.ordinates:
                    store.put("zeros", zero_store_record(lf_label, t))
                    counts["zeros"] += 1
    return counts


def primitive_character_count(max_modulus: int) -> int:
    """Brute-force count of primitive characters with modulus <= bound."""
    return sum(
        sum(1 for chi in character_group(n) if chi.primitive)
        for n in range(1, max_modulus + 1)
    )


def enrich_curves(store: Store, coeff_bound: int = 1000) -> dict[str, int]:
    """Attach computed data to every ingested curve: the Hasse check, the
    degree-2 L-function record, and per-field provenance tags."""
    counts = {"curves": 0, "lfunctions": 0}
    for record in store.query("elliptic_curves_q"):
        view = ec_view(record)
        curve = view.curve()
        # the Hasse bound at every good prime is enforced while the local
        # data is computed (ReductionData refuses violations)
        lf = ec_lfunction(curve, coeff_bound)
        ec = view.ec_label
        lf_label = f"EllipticCurve/Q/{ec.conductor}/{ec.isogeny_class}/{ec.curve_number}"
        store.put("lfunctions",
                  lfunction_store_record(lf, lf_label, f"EllipticCurve:{view.label}"))
        counts["lfunctions"] += 1

        provenance = {k: "ingested" for k in
                      ("ainvs", "conductor", "rank", "torsion_structure")}
        provenance["lfunction_label"] = "computed"
        record["lfunction_label"] = lf_label
        record["provenance"] = provenance
        store.put("elliptic_curves_q", record)
        counts["curves"] += 1
    return counts


def enrich_quadratic_fields(store: Store, coeff_bound: int = 1000) -> dict[str, int]:
    """Dedekind-zeta records for the stored quadratic fields."""
    counts = {"fields": 0, "lfunctions": 0}
    for record in store.query("number_fields", [Filter.eq("degree", 2)]):
        view = nf_view(record)
        disc = view.disc_sign * int(view.abs_disc)
        if not is_fundamental_discriminant(disc):
            continue
        lf = dedekind_quadratic(disc, coeff_bound)
        lf_label = f"NumberField/{view.label}"
        store.put("lfunctions",
                  lfunction_store_record(lf, lf_label, f"NumberField:{view.label}"))
        counts["lfunctions"] += 1
        record["lfunction_label"] = lf_label
        store.put("number_fields", record)
        counts["fields"] += 1
    return counts


# ----------------------------------------------------------- related objects

def _resolves(store: Store, cls: str, label: str) -> bool:
    try:
        store.get(COLLECTION_OF_CLASS[cls], label)
        return True
    except NotFoundError:
        return False


def _lfunction_relation(store: Store, name: str, lf_label: str) -> Relation:
    return Relation(
        name=name,
        target_class=CLASS_LFUNCTION,
        target_label=lf_label,
        target_url=object_url(CLASS_LFUNCTION, lf_label),
        resolved=_resolves(store, CLASS_LFUNCTION, lf_label),
    )


def link_objects(store: Store, label: str, cls: str) -> RelatedObjects:
    """The related-objects box of one homepage.

    Unresolved targets are flagged (resolved=False, "not yet in database"),
    never dropped.  Raises NotFoundError when the subject itself is absent.
    """
    record = store.get(COLLECTION_OF_CLASS[cls], label)  # may raise
    relations: list[Relation] = []

    if cls == CLASS_ELLIPTIC_CURVE:
        ec = parse_ec_label(label)
        lf_label = f"EllipticCurve/Q/{ec.conductor}/{ec.isogeny_class}/{ec.curve_number}"
        relations.append(_lfunction_relation(store, "L-function", lf_label))

    elif cls == CLASS_CHARACTER:
        cl = parse_character_label(label)
        if record.get("primitive"):
            lf_label = ("Riemann" if cl.modulus == 1
                        else f"Character/Dirichlet/{cl.modulus}/{cl.index}")
            relations.append(_lfunction_relation(store, "L-function", lf_label))

    elif cls == CLASS_NUMBER_FIELD:
        view = nf_view(record)
        if view.degree == 2:
            disc = view.disc_sign * int(view.abs_disc)
            if is_fundamental_discriminant(disc):
                relations.append(_lfunction_relation(
                    store, "Dedekind zeta", f"NumberField/{label}"))
                relations.append(_lfunction_relation(
                    store, "zeta factor", "Riemann"))
                chi = kronecker_character(disc)
                j = character_label(chi).index
                relations.append(_lfunction_relation(
                    store, "zeta factor", f"Character/Dirichlet/{abs(disc)}/{j}"))

    elif cls == CLASS_LFUNCTION:
        origin = record.get("origin", "")
        if ":" in origin:
            obj_cls, obj_label = origin.split(":", 1)
            relations.append(Relation(
                name="origin object",
                target_class=obj_cls,
                target_label=obj_label,
                target_url=object_url(obj_cls, obj_label),
                resolved=_resolves(store, obj_cls, obj_label),
            ))

    return RelatedObjects(label=label, cls=cls, relations=tuple(relations))


# ----------------------------------------------------------------- snippets

def polynomial_text(coeffs_low_first) -> str:
    """Human form of an integer polynomial, e.g. "x^3 - x^2 + 1"."""
    terms = []
    for k in range(len(coeffs_low_first) - 1, -1, -1):
        c = coeffs_low_first[k]
        if c == 0:
            continue
        if k == 0:
            body = str(abs(c))
        else:
            var = "x" if k == 1 else f"x^{k}"
            body = var if abs(c) == 1 else f"{abs(c)}*{var}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(terms) if terms else "0"


def weierstrass_text(ainvs) -> str:
    a1, a2, a3, a4, a6 = ainvs
    left = "y^2"
    for c, mono in ((a1, "x*y"), (a3, "y")):
        if c:
            term = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            left += f" + {term}" if c > 0 else f" - {term}"
    right = polynomial_text([a6, a4, a2, 1])
    return f"{left} = {right}"


def reconstruction_snippet(store: Store, label: str, cls: str) -> str:
    """Dialect-neutral text that rebuilds the object in any CAS.

    Deterministic: the snippet is a pure function of the stored record."""
    record = store.get(COLLECTION_OF_CLASS[cls], label)  # may raise

    if cls == CLASS_NUMBER_FIELD:
        view = nf_view(record)
        poly = polynomial_text(view.coeffs)
        return (
            f"# Number field {view.label}\n"
            f"# Define the field by the minimal polynomial of a generator:\n"
            f"f = {poly}\n"
            f"K = NumberField(f)\n"
            f"# stored invariants: degree {view.degree}, discriminant "
            f"{view.discriminant_text}, class number {view.class_number}, "
            f"signature ({view.signature[0]},{view.signature[1]})\n"
        )

    if cls == CLASS_ELLIPTIC_CURVE:
        view = ec_view(record)
        eq = weierstrass_text(view.ainvs)
        torsion = (
            " x ".join(f"Z/{n}Z" for n in view.torsion_structure)
            if view.torsion_structure else "trivial"
        )
        return (
            f"# Elliptic curve {view.label} over Q\n"
            f"#   {eq}\n"
            f"E = EllipticCurve([{', '.join(str(a) for a in view.ainvs)}])\n"
            f"# stored invariants: conductor {view.conductor}, rank {view.rank}, "
            f"torsion {torsion}\n"
        )

    if cls == CLASS_CHARACTER:
        mod = record["modulus"]
        exps = record["exponent_vector"]
        from .arith import unit_group

        gens = unit_group(mod).generators
        orders = unit_group(mod).orders
        pairs = ", ".join(
            f"chi({g}) = e({c}/{s})" for g, c, s in zip(gens, exps, orders)
        ) or "chi(n) = 1 for all n"
        return (
            f"# Dirichlet character {label} (modulus {mod}, conductor "
            f"{record['conductor']}, order {record['order']})\n"
            f"# values on the generators of (Z/{mod}Z)*, e(q) = exp(2*pi*i*q):\n"
            f"# {pairs}\n"
            f"chi = DirichletCharacter(modulus={mod}, "
            f"generator_exponents={list(exps)})\n"
        )

    if cls == CLASS_LFUNCTION:
        coeffs = record["coeffs"][:30]
        return (
            f"# L-function {label} (degree {record['degree']}, conductor "
            f"{record['conductor']})\n"
            f"# Dirichlet coefficients a_1..a_{len(coeffs)}:\n"
            f"a = [{', '.join(coeffs)}]\n"
        )

    raise KeyError(f"unknown object class {cls!r}")
