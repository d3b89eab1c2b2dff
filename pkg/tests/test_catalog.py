import pytest

from lfuncdb.catalog import (
    CLASS_CHARACTER,
    CLASS_ELLIPTIC_CURVE,
    CLASS_LFUNCTION,
    CLASS_NUMBER_FIELD,
    build_character_catalog,
    ec_view,
    enrich_curves,
    enrich_quadratic_fields,
    link_objects,
    nf_view,
    polynomial_text,
    primitive_character_count,
    reconstruction_snippet,
    weierstrass_text,
)
from lfuncdb.store import NotFoundError, Store

NF_31231 = {
    "label": "3.1.23.1", "coeffs": "1,0,-1,1", "degree": 3, "disc_sign": -1,
    "disc_abs": "23", "class_number": 1, "class_group": "",
    "galois": {"n": 3, "t": 2}, "galois_n": 3, "galois_t": 2,
    "signature": "1,1", "ramps": ["23"], "unitsGmodule": [[3, 1]],
}
NF_2041 = {
    "label": "2.0.4.1", "coeffs": "1,0,1", "degree": 2, "disc_sign": -1,
    "disc_abs": "4", "class_number": 1, "class_group": "",
    "galois": {"n": 2, "t": 1}, "galois_n": 2, "galois_t": 1,
    "signature": "0,1", "ramps": ["2"],
}
EC_5077A1 = {
    "label": "5077a1", "ainvs": [0, 0, 1, -7, 6], "conductor": "5077",
    "rank": 3, "torsion_structure": [],
    "historical_note": "Used by Dorian Goldfeld in 1985 to give an "
                       "effective solution of Gauss's class number problem.",
}
EC_37A1 = {
    "label": "37a1", "ainvs": [0, 0, 1, -1, 0], "conductor": "37",
    "rank": 1, "torsion_structure": [],
}


@pytest.fixture
def seeded():
    store = Store(None)
    store.put("number_fields", NF_31231)
    store.put("number_fields", NF_2041)
    store.put("elliptic_curves_q", EC_5077A1)
    store.put("elliptic_curves_q", EC_37A1)
    return store


def test_views(seeded):
    nf = nf_view(seeded.get("number_fields", "3.1.23.1"))
    assert nf.degree == 3 and nf.signature == (1, 1)
    assert nf.discriminant_text == "-23"
    ec = ec_view(seeded.get("elliptic_curves_q", "5077a1"))
    assert ec.ainvs == (0, 0, 1, -7, 6)
    assert ec.curve().discriminant == 5077
    assert "Goldfeld" in ec.historical_note


def test_view_invariants():
    bad = dict(NF_31231, signature="2,1")
    with pytest.raises(ValueError):
        nf_view(bad)
    bad_ec = dict(EC_5077A1, conductor="5078")
    with pytest.raises(ValueError):
        ec_view(bad_ec)


def test_build_character_catalog_mod4(seeded):
    counts = build_character_catalog(seeded, 4, coeff_bound=50, zero_height=15)
    labels = sorted(r["label"] for r in seeded.query("characters"))
    assert labels == ["1.1", "3.2", "4.2"]
    assert counts["characters"] == 3
    assert all(r["conductor"] <= 4 for r in seeded.query("characters"))
    # zeta record exists with degree 1, conductor 1
    zeta = seeded.get("lfunctions", "Riemann")
    assert zeta["degree"] == 1 and zeta["conductor"] == "1"
    assert zeta["kind"] == "riemann-zeta"
    # zeros were scanned for the self-dual characters
    assert seeded.count("zeros") == counts["zeros"] > 0


def test_character_catalog_counts_match_bruteforce(seeded):
    counts = build_character_catalog(seeded, 20, coeff_bound=20, zero_height=0.5)
    assert counts["characters"] == primitive_character_count(20)
    assert seeded.count("characters") == counts["characters"]


def test_build_idempotent(seeded):
    build_character_catalog(seeded, 4, coeff_bound=30, zero_height=10)
    d1 = {n: seeded.dump_text(n) for n in ("characters", "lfunctions", "zeros")}
    build_character_catalog(seeded, 4, coeff_bound=30, zero_height=10)
    d2 = {n: seeded.dump_text(n) for n in ("characters", "lfunctions", "zeros")}
    assert d1 == d2


def test_enrich_curves(seeded):
    counts = enrich_curves(seeded, coeff_bound=100)
    assert counts == {"curves": 2, "lfunctions": 2}
    lf = seeded.get("lfunctions", "EllipticCurve/Q/5077/a/1")
    assert lf["degree"] == 2 and lf["conductor"] == "5077"
    assert lf["critical_line"] == 1.0
    assert lf["origin"] == "EllipticCurve:5077a1"
    assert "root_re" not in lf  # sign not computed for degree 2
    curve = seeded.get("elliptic_curves_q", "5077a1")
    assert curve["lfunction_label"] == "EllipticCurve/Q/5077/a/1"
    assert curve["provenance"]["rank"] == "ingested"
    assert curve["provenance"]["lfunction_label"] == "computed"


def test_enrich_quadratic_fields(seeded):
    counts = enrich_quadratic_fields(seeded, coeff_bound=60)
    assert counts == {"fields": 1, "lfunctions": 1}
    lf = seeded.get("lfunctions", "NumberField/2.0.4.1")
    assert lf["kind"] == "dedekind-quadratic"
    assert lf["coeffs"][:6] == ["1", "1", "0", "1", "2", "0"]


def test_link_objects_curve(seeded):
    enrich_curves(seeded, coeff_bound=30)
    related = link_objects(seeded, "5077a1", CLASS_ELLIPTIC_CURVE)
    (rel,) = related.relations
    assert rel.name == "L-function"
    assert rel.target_url == "/api/L/EllipticCurve/Q/5077/a/1"
    assert rel.resolved


def test_link_objects_unresolved_flagged(seeded):
    related = link_objects(seeded, "5077a1", CLASS_ELLIPTIC_CURVE)
    (rel,) = related.relations
    assert not rel.resolved  # flagged, never dropped


def test_link_objects_quadratic_field(seeded):
    build_character_catalog(seeded, 4, coeff_bound=30, zero_height=5)
    enrich_quadratic_fields(seeded, coeff_bound=30)
    related = link_objects(seeded, "2.0.4.1", CLASS_NUMBER_FIELD)
    names = [r.name for r in related.relations]
    assert names == ["Dedekind zeta", "zeta factor", "zeta factor"]
    urls = [r.target_url for r in related.relations]
    assert "/api/L/Riemann" in urls
    assert "/api/L/Character/Dirichlet/4/2" in urls
    assert all(r.resolved for r in related.relations)


def test_link_objects_cubic_field_empty(seeded):
    related = link_objects(seeded, "3.1.23.1", CLASS_NUMBER_FIELD)
    assert related.relations == ()


def test_link_objects_character_and_lfunction(seeded):
    build_character_catalog(seeded, 4, coeff_bound=30, zero_height=5)
    related = link_objects(seeded, "4.2", CLASS_CHARACTER)
    (rel,) = related.relations
    assert rel.target_label == "Character/Dirichlet/4/2" and rel.resolved
    back = link_objects(seeded, "Character/Dirichlet/4/2", CLASS_LFUNCTION)
    (origin,) = back.relations
    assert origin.target_label == "4.2" and origin.resolved


def test_link_objects_missing_label(seeded):
    with pytest.raises(NotFoundError):
        link_objects(seeded, "9999z9", CLASS_ELLIPTIC_CURVE)


def test_polynomial_text():
    assert polynomial_text([1, 0, -1, 1]) == "x^3 - x^2 + 1"
    assert polynomial_text([1, 0, 1]) == "x^2 + 1"
    assert polynomial_text([-2, 3]) == "3*x - 2"
    assert polynomial_text([0]) == "0"
    assert polynomial_text([5]) == "5"


def test_weierstrass_text():
    assert weierstrass_text((0, 0, 1, -7, 6)) == "y^2 + y = x^3 - 7*x + 6"
    assert weierstrass_text((0, -1, 1, 0, 0)) == "y^2 + y = x^3 - x^2"
    assert weierstrass_text((1, 0, 0, -1, 0)) == "y^2 + x*y = x^3 - x"


def test_snippet_number_field(seeded):
    text = reconstruction_snippet(seeded, "3.1.23.1", CLASS_NUMBER_FIELD)
    assert "x^3 - x^2 + 1" in text
    assert text == reconstruction_snippet(seeded, "3.1.23.1", CLASS_NUMBER_FIELD)


def test_snippet_curve(seeded):
    text = reconstruction_snippet(seeded, "5077a1", CLASS_ELLIPTIC_CURVE)
    assert "[0, 0, 1, -7, 6]" in text
    assert "y^2 + y = x^3 - 7*x + 6" in text


def test_snippet_character(seeded):
    build_character_catalog(seeded, 4, coeff_bound=20, zero_height=5)
    text = reconstruction_snippet(seeded, "4.2", CLASS_CHARACTER)
    assert "modulus=4" in text
    text_lf = reconstruction_snippet(seeded, "Riemann", CLASS_LFUNCTION)
    assert "a = [1, 1, 1" in text_lf


def test_snippet_missing(seeded):
    with pytest.raises(NotFoundError):
        reconstruction_snippet(seeded, "2.0.8.1", CLASS_NUMBER_FIELD)
