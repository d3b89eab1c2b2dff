"""Operator entry point: build catalogs, ingest/dump text data, serve HTTP.

    lfuncdb build-characters --data DIR --max-modulus M --coeffs X --zeros-to T
    lfuncdb build-objects    --data DIR --coeffs X
    lfuncdb ingest           --data DIR --collection C --file F
    lfuncdb dump             --data DIR --collection C --out F
    lfuncdb serve            --data DIR --port P

Exit codes are a stable contract for scripts: 0 success, 1 internal error,
2 input error.  Builds and ingests take the data directory's writer lock
(one writer process at a time); builds emit a JSON manifest on stdout and
compact the store afterwards, so rebuilding with identical parameters
leaves dump-identical files.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .catalog import build_character_catalog, enrich_curves, enrich_quadratic_fields
from .store import FORMATS, IngestError, Store, StoreLockedError, WriterLock


@dataclass
class BuildManifest:
    """What a build run did: parameters, timing, records written."""

    tasks: list[dict] = field(default_factory=list)

    def add(self, name: str, params: dict, wall_clock_s: float,
            records_written: dict[str, int]) -> None:
        self.tasks.append({
            "name": name,
            "params": params,
            "wall_clock_s": round(wall_clock_s, 3),
            "records_written": records_written,
        })

    def emit(self) -> None:
        print(json.dumps(asdict(self), indent=2, sort_keys=True))


def _cmd_build_characters(args) -> int:
    params = {
        "max_modulus": args.max_modulus,
        "coeffs": args.coeffs,
        "zeros_to": args.zeros_to,
    }
    with WriterLock(Path(args.data)):
        store = Store(args.data)
        started = time.monotonic()
        counts = build_character_catalog(
            store, args.max_modulus, coeff_bound=args.coeffs,
            zero_height=args.zeros_to)
        store.compact()
        manifest = BuildManifest()
        manifest.add("build-characters", params, time.monotonic() - started, counts)
        manifest.emit()
    return 0


def _cmd_build_objects(args) -> int:
    with WriterLock(Path(args.data)):
        store = Store(args.data)
        manifest = BuildManifest()
        started = time.monotonic()
        curve_counts = enrich_curves(store, coeff_bound=args.coeffs)
        manifest.add("enrich-curves", {"coeffs": args.coeffs},
                     time.monotonic() - started, curve_counts)
        started = time.monotonic()
        field_counts = enrich_quadratic_fields(store, coeff_bound=args.coeffs)
        manifest.add("enrich-quadratic-fields", {"coeffs": args.coeffs},
                     time.monotonic() - started, field_counts)
        store.compact()
        manifest.emit()
    return 0


def _cmd_ingest(args) -> int:
    with WriterLock(Path(args.data)):
        store = Store(args.data)
        count = store.ingest_text(args.collection, args.file)
        store.compact()
    print(f"ingested {count} records into {args.collection}")
    return 0


def _cmd_dump(args) -> int:
    store = Store(args.data)
    text = store.dump_text(args.collection)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text, encoding="utf-8")
    return 0


def _cmd_serve(args) -> int:
    store = Store(args.data)
    if not store.is_built():
        print(f"error: {args.data} contains no built store "
              f"(run build-characters / ingest first)", file=sys.stderr)
        return 2
    import uvicorn

    from .webapi import create_app

    uvicorn.run(create_app(store), host="127.0.0.1", port=args.port,
                log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lfuncdb",
        description="L-function and object database: build, ingest, dump, serve.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build-characters",
                       help="build the complete degree-1 catalog up to a modulus")
    p.add_argument("--data", required=True, help="store directory")
    p.add_argument("--max-modulus", type=int, default=20)
    p.add_argument("--coeffs", type=int, default=1000,
                   help="Dirichlet coefficient bound X")
    p.add_argument("--zeros-to", type=float, default=30.0,
                   help="zero-scan ceiling T on the critical line")
    p.set_defaults(func=_cmd_build_characters)

    p = sub.add_parser("build-objects",
                       help="enrich ingested curves and quadratic fields with "
                            "their L-function records")
    p.add_argument("--data", required=True)
    p.add_argument("--coeffs", type=int, default=1000)
    p.set_defaults(func=_cmd_build_objects)

    p = sub.add_parser("ingest", help="ingest a plain-text collection file")
    p.add_argument("--data", required=True)
    p.add_argument("--collection", required=True, choices=sorted(FORMATS))
    p.add_argument("--file", required=True)
    p.set_defaults(func=_cmd_ingest)

    p = sub.add_parser("dump", help="write a collection as plain text")
    p.add_argument("--data", required=True)
    p.add_argument("--collection", required=True, choices=sorted(FORMATS))
    p.add_argument("--out", required=True, help="output path, or - for stdout")
    p.set_defaults(func=_cmd_dump)

    p = sub.add_parser("serve", help="serve the JSON API over HTTP")
    p.add_argument("--data", required=True)
    p.add_argument("--port", type=int, default=8080)
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (IngestError, StoreLockedError, FileNotFoundError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
