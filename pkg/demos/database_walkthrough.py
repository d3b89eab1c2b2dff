"""Build the desk-scale database in a temp directory and explore it.

Mirrors what the CLI does (ingest, build, serve), then talks to the JSON
API in-process: homepages, search, zero tables, knowls, downloads.
"""

import json
import tempfile
from pathlib import Path

from fastapi.testclient import TestClient

from lfuncdb.cli import main as cli
from lfuncdb.store import Store
from lfuncdb.webapi import create_app

DATA = Path(__file__).resolve().parents[1] / "data"

with tempfile.TemporaryDirectory() as td:
    # 1. ingest the plain-text seeds (the source of truth)
    for coll in ("number_fields", "elliptic_curves_q", "knowls"):
        cli(["ingest", "--data", td, "--collection", coll,
             "--file", str(DATA / f"{coll}.txt")])

    # 2. build the complete degree-1 catalog and enrich the objects
    cli(["build-characters", "--data", td, "--max-modulus", "12",
         "--coeffs", "100", "--zeros-to", "25"])
    cli(["build-objects", "--data", td, "--coeffs", "100"])

    # 3. query it over the JSON API (in-process; `lfuncdb serve` does the
    #    same over a socket)
    client = TestClient(create_app(Store(td)))

    print("\n--- the Riemann page ---")
    doc = client.get("/api/L/Riemann").json()
    for prop in doc["properties"][:4]:
        print(f"  {prop['name']}: {prop['value']}")
    print("  first zeros:", [round(z["t"], 4) for z in doc["zeros"][:3]])

    print("\n--- search: rank-2 curves with conductor <= 1000 ---")
    hits = client.post("/api/search/elliptic_curves_q", json={
        "filters": {"rank": 2, "conductor": {"min": 1, "max": 1000}},
    }).json()
    for row in hits["results"]:
        print(f"  {row['label']} -> {row['url']}")

    print("\n--- the Goldfeld curve ---")
    doc = client.get("/api/EllipticCurve/Q/5077/a/1").json()
    print(" ", doc["historical_note"][:70], "...")
    print("  related:", [r["url"] for r in doc["related_objects"]])

    print("\n--- a knowl, with inline inclusions resolved ---")
    doc = client.get("/api/knowl/lfunction").json()
    for node in doc["nodes"]:
        if node["type"] == "text":
            print("  text:", node["text"][:48], "...")
        else:
            print(f"  [{node['type']}] {node['id']} ({node['title']})")

    print("\n--- a reconstruction snippet ---")
    print(client.get("/api/download/NumberField/3.1.23.1").text)

    print("--- full store contents ---")
    print(json.dumps(client.get("/api/health").json()["collections"], indent=2))
