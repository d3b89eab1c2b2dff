import json

import pytest
from fastapi.testclient import TestClient

from lfuncdb.store import Store
from lfuncdb.webapi import create_app


@pytest.fixture(scope="module")
def client(built_data_dir):
    return TestClient(create_app(Store(built_data_dir)))


def test_health(client):
    r = client.get("/api/health")
    assert r.status_code == 200
    body = r.json()
    assert body["status"] == "ok"
    assert body["collections"]["characters"] > 0


def test_riemann_homepage(client):
    r = client.get("/api/L/Riemann")
    assert r.status_code == 200
    doc = r.json()
    props = {p["name"]: p["value"] for p in doc["properties"]}
    assert props["degree"] == 1
    assert props["conductor"] == "1"
    assert doc["zeros"][0]["t"] == pytest.approx(14.1347, abs=0.01)
    assert 14.0 < doc["zeros"][0]["t"] < 14.2
    assert len(doc["plot"]["t"]) == 600
    assert doc["coefficients"][:5] == ["1", "1", "1", "1", "1"]
    assert any("functional equation" == p["name"] for p in doc["properties"])


def test_riemann_plot_resolution(client):
    r = client.get("/api/L/Riemann", params={"points": 123})
    assert len(r.json()["plot"]["t"]) == 123
    r = client.get("/api/L/Riemann", params={"points": 100000})
    assert r.status_code == 400


def test_plot_sign_changes_match_zero_table(client):
    doc = client.get("/api/L/Riemann", params={"points": 600, "t_max": 30}).json()
    zs = doc["plot"]["z"]
    changes = sum(1 for a, b in zip(zs, zs[1:]) if a * b < 0)
    table = [z for z in doc["zeros"] if z["t"] <= 30]
    assert changes == len(table) == 3


def test_curve_homepage(client):
    r = client.get("/api/EllipticCurve/Q/5077/a/1")
    assert r.status_code == 200
    doc = r.json()
    assert "Goldfeld" in doc["historical_note"]
    props = {p["name"]: p for p in doc["properties"]}
    assert props["rank"]["value"] == 3
    assert props["rank"]["source"] == "stored"
    assert props["Weierstrass equation"]["source"] == "computed"
    assert doc["ap"]["source"] == "computed"
    (rel,) = doc["related_objects"]
    assert rel["url"] == "/api/L/EllipticCurve/Q/5077/a/1"
    assert rel["resolved"]


def test_curve_404_and_400(client):
    r = client.get("/api/EllipticCurve/Q/5077/b/1")
    assert r.status_code == 404
    assert r.json()["code"] == "not_found"
    r = client.get("/api/EllipticCurve/Q/5077/A/1")
    assert r.status_code == 400
    assert r.json()["code"] == "bad_request"


def test_number_field_homepage(client):
    r = client.get("/api/NumberField/3.1.23.1")
    assert r.status_code == 200
    props = {p["name"]: p["value"] for p in r.json()["properties"]}
    assert props["class_number"] == 1
    assert props["defining polynomial"] == "x^3 - x^2 + 1"
    r = client.get("/api/NumberField/3.2.23.1")
    assert r.status_code == 400  # parity violation: malformed label
    r = client.get("/api/NumberField/5.1.100.1")
    assert r.status_code == 404


def test_quadratic_field_relations(client):
    doc = client.get("/api/NumberField/2.0.4.1").json()
    urls = [rel["url"] for rel in doc["related_objects"]]
    assert "/api/L/Riemann" in urls
    assert "/api/L/Character/Dirichlet/4/2" in urls
    assert "/api/L/NumberField/2.0.4.1" in urls
    assert all(rel["resolved"] for rel in doc["related_objects"])


def test_character_homepage(client):
    r = client.get("/api/Character/Dirichlet/4/2")
    assert r.status_code == 200
    doc = r.json()
    table = {row["n"]: row["value"] for row in doc["values"]["table"]}
    assert table[1] == "1" and table[3] == "-1" and table[2] == "0"
    r = client.get("/api/Character/Dirichlet/4/9")
    assert r.status_code == 404
    r = client.get("/api/Character/Dirichlet/4/x")
    assert r.status_code == 400


def test_search_curves_rank2(client):
    r = client.post("/api/search/elliptic_curves_q", json={
        "filters": {"rank": 2, "conductor": {"min": 1, "max": 1000}},
    })
    assert r.status_code == 200
    body = r.json()
    assert body["total"] == 1
    for row in body["results"]:
        assert row["rank"] == 2
        assert client.get(row["url"]).status_code == 200


def test_search_empty_filter_pagination(client):
    r = client.post("/api/search/characters", json={"filters": {}, "page_size": 10})
    body = r.json()
    assert len(body["results"]) == 10
    labels = [row["label"] for row in body["results"]]
    assert labels == sorted(labels)
    assert body["total"] == client.get("/api/health").json()["collections"]["characters"]
    # pagination is stable across repeated requests
    again = client.post("/api/search/characters", json={"filters": {}, "page_size": 10})
    assert again.json() == body


def test_search_fields_ramps(client):
    r = client.post("/api/search/number_fields", json={
        "filters": {"ramps": {"contains": "23"}},
    })
    labels = [row["label"] for row in r.json()["results"]]
    assert "3.1.23.1" in labels


def test_search_unknown_field_lists_valid(client):
    r = client.post("/api/search/number_fields", json={"filters": {"rank": 2}})
    assert r.status_code == 400
    body = r.json()
    assert "degree" in body["valid_fields"]
    r = client.post("/api/search/nope", json={"filters": {}})
    assert r.status_code == 404


def test_search_count_matches_resolvable_rows(client):
    r = client.post("/api/search/elliptic_curves_q",
                    json={"filters": {}, "page_size": 200})
    body = r.json()
    assert body["total"] == len(body["results"])
    for row in body["results"]:
        assert client.get(row["url"]).status_code == 200


def test_zeros_endpoint(client):
    r = client.get("/api/zeros/zeta", params={"from": 0, "count": 3})
    zs = [z["t"] for z in r.json()["zeros"]]
    assert len(zs) == 3
    assert 14.0 < zs[0] < 14.2
    assert zs == sorted(zs)
    r = client.get("/api/zeros/zeta", params={"from": 10**6, "count": 5})
    assert r.json()["zeros"] == []
    r = client.get("/api/zeros/zeta", params={"from": 0, "count": 5000})
    assert r.status_code == 400
    r = client.get("/api/zeros/zeta", params={"from": -1, "count": 5})
    assert r.status_code == 400


def test_zeros_pagination_resumes(client):
    first = client.get("/api/zeros/zeta", params={"from": 0, "count": 2}).json()["zeros"]
    rest = client.get("/api/zeros/zeta",
                      params={"from": first[-1]["t"] + 1e-6, "count": 2}).json()["zeros"]
    assert rest[0]["t"] > first[-1]["t"]


def test_download_endpoints(client):
    r = client.get("/api/download/NumberField/3.1.23.1")
    assert r.status_code == 200 and "x^3 - x^2 + 1" in r.text
    r = client.get("/api/download/EllipticCurve/5077a1")
    assert "[0, 0, 1, -7, 6]" in r.text
    r = client.get("/api/download/Character/4.2")
    assert "modulus=4" in r.text
    r = client.get("/api/download/NumberField/9.1.23.1")
    assert r.status_code == 404


def test_knowl_endpoints(client):
    r = client.get("/api/knowl/lfunction")
    assert r.status_code == 200
    doc = r.json()
    assert doc["title"] == "L-function"
    stub_ids = [n["id"] for n in doc["nodes"] if n["type"] == "stub"]
    assert "lfunction.degree" in stub_ids
    assert client.get("/knowledge/show/lfunction").json() == doc
    assert client.get("/api/knowl/nope").status_code == 404


def test_knowl_save_roundtrip(built_data_dir):
    # separate client: this mutates the store
    store = Store(built_data_dir)
    local = TestClient(create_app(store))
    r = local.post("/api/knowl/test.scratch", json={
        "title": "Scratch", "content": "v1", "author": "t"})
    assert r.status_code == 200 and r.json()["version"] == 1
    r = local.post("/api/knowl/test.scratch", json={
        "title": "Scratch", "content": "v2", "author": "t"})
    assert r.json()["version"] == 2
    assert local.get("/api/knowl/test.scratch").json()["nodes"][0]["text"] == "v2"
    r = local.post("/api/knowl/BAD ID", json={
        "title": "x", "content": "y", "author": "z"})
    assert r.status_code == 400


def crawl_everything(client):
    """Visit every homepage and follow every related-object link."""
    pages = []
    health = client.get("/api/health").json()["collections"]
    for label in [r["label"] for r in
                  client.post("/api/search/elliptic_curves_q",
                              json={"filters": {}, "page_size": 200}).json()["results"]]:
        pages.append(client.get(f"/api/EllipticCurve/Q/"
                                f"{_ec_url(label)}").json())
    for label in [r["label"] for r in
                  client.post("/api/search/number_fields",
                              json={"filters": {}, "page_size": 200}).json()["results"]]:
        pages.append(client.get(f"/api/NumberField/{label}").json())
    for label in [r["label"] for r in
                  client.post("/api/search/characters",
                              json={"filters": {}, "page_size": 200}).json()["results"]]:
        n, j = label.split(".")
        pages.append(client.get(f"/api/Character/Dirichlet/{n}/{j}").json())
    assert health["characters"] + health["number_fields"] + \
        health["elliptic_curves_q"] == len(pages)
    dangling = []
    seen_lf = set()
    for page in pages:
        for rel in page["related_objects"]:
            if not rel["resolved"]:
                dangling.append((page["label"], rel["url"]))
                continue
            r = client.get(rel["url"])
            if r.status_code != 200:
                dangling.append((page["label"], rel["url"]))
            elif rel["target_class"] == "LFunction":
                seen_lf.add(rel["target_label"])
    return pages, dangling, seen_lf


def _ec_url(label):
    from lfuncdb.labels import format_ec_label, parse_ec_label

    return format_ec_label(parse_ec_label(label), "url")


def test_crawl_no_dangling_links(client):
    pages, dangling, seen_lf = crawl_everything(client)
    assert dangling == []
    assert "Riemann" in seen_lf
    # second-level crawl: L-function pages link back to resolvable origins
    for lf_label in sorted(seen_lf):
        doc = client.get(f"/api/L/{lf_label}").json()
        for rel in doc["related_objects"]:
            assert rel["resolved"], (lf_label, rel)
            assert client.get(rel["url"]).status_code == 200


def test_homepage_determinism_across_restarts(built_data_dir):
    urls = [
        "/api/L/Riemann",
        "/api/L/Character/Dirichlet/4/2",
        "/api/L/EllipticCurve/Q/5077/a/1",
        "/api/EllipticCurve/Q/5077/a/1",
        "/api/NumberField/3.1.23.1",
        "/api/Character/Dirichlet/4/2",
    ]
    c1 = TestClient(create_app(Store(built_data_dir)))
    c2 = TestClient(create_app(Store(built_data_dir)))
    for url in urls:
        b1 = c1.get(url).content
        b2 = c2.get(url).content
        assert b1 == b2, url


def test_busy_while_writer_locked(built_data_dir):
    lock = built_data_dir / ".writer.lock"
    lock.write_text("999999999")
    try:
        local = TestClient(create_app(Store(built_data_dir)))
        r = local.get("/api/L/Riemann")
        assert r.status_code == 503
        assert r.json()["code"] == "busy"
    finally:
        lock.unlink()
