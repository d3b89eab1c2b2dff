"""JSON HTTP service: homepages, search, zeros, knowls, downloads.

Every stored object gets a permanent, mathematically meaningful URL:

    /api/L/Riemann                       /api/L/{label...}
    /api/EllipticCurve/Q/{cond}/{iso}/{num}
    /api/NumberField/{label}
    /api/Character/Dirichlet/{N}/{j}
    POST /api/search/{collection}
    /api/zeros/zeta?from=T&count=k
    /api/download/{class}/{label...}
    /api/knowl/{id}        /knowledge/show/{id}

Homepages are assembled per request: stored fields come straight from the
record (source "stored"), small displayed quantities (Euler factors,
character values, critical-line plot samples) are recomputed on the fly
(source "computed"); nothing is cached, so for fixed store content the
JSON is byte-identical across restarts.  Long computations (zero scans,
catalog builds) never run here.  While a build process holds the data
directory's writer lock, requests are answered 503.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse, PlainTextResponse

from .arith import char_eval, character_from_exponents, make_curve
from .catalog import (
    CLASS_CHARACTER,
    CLASS_ELLIPTIC_CURVE,
    CLASS_LFUNCTION,
    CLASS_NUMBER_FIELD,
    ec_view,
    link_objects,
    nf_view,
    object_url,
    polynomial_text,
    reconstruction_snippet,
    weierstrass_text,
)
from .knowl import KnowlValidationError, latest_version, render_knowl, save_knowl
from .labels import LabelError, parse_ec_label, parse_nf_label
from .lfunc import (
    KIND_DIRICHLET,
    KIND_ZETA,
    character_lfunction,
    critical_line_samples,
    riemann_zeta_lfunction,
)
from .store import (
    Filter,
    NotFoundError,
    Store,
    UnsupportedFilterError,
    WriterLock,
    StoreLockedError,
    write_locked_by_other,
)

MAX_PLOT_POINTS = 2000
DEFAULT_PLOT_POINTS = 600
MAX_ZERO_PAGE = 1000

# typed filter schema per searchable collection: field -> allowed forms
SEARCH_SCHEMAS: dict[str, dict[str, dict]] = {
    "elliptic_curves_q": {
        "rank": {"forms": ("eq",), "type": int},
        "torsion_structure": {"forms": ("eq",), "type": list},
        "conductor": {"forms": ("eq", "range"), "type": "bigint"},
    },
    "number_fields": {
        "degree": {"forms": ("eq",), "type": int},
        "class_number": {"forms": ("eq",), "type": int},
        "galois_n": {"forms": ("eq",), "type": int},
        "galois_t": {"forms": ("eq",), "type": int},
        "signature": {"forms": ("eq",), "type": str},
        "ramps": {"forms": ("contains",), "type": "text_element"},
        "disc_abs": {"forms": ("eq", "range"), "type": "bigint"},
    },
    "characters": {
        "modulus": {"forms": ("eq", "range"), "type": int},
        "conductor": {"forms": ("eq", "range"), "type": int},
        "parity": {"forms": ("eq",), "type": int},
        "order": {"forms": ("eq",), "type": int},
        "primitive": {"forms": ("eq",), "type": bool},
    },
}

SUMMARY_FIELDS = {
    "elliptic_curves_q": ("conductor", "rank", "torsion_structure"),
    "number_fields": ("degree", "disc_sign", "disc_abs", "class_number"),
    "characters": ("modulus", "conductor", "order", "parity", "primitive"),
}

CLASS_OF_COLLECTION = {
    "elliptic_curves_q": CLASS_ELLIPTIC_CURVE,
    "number_fields": CLASS_NUMBER_FIELD,
    "characters": CLASS_CHARACTER,
}

# knowls each page kind leans on (resolved against the store per request)
PAGE_KNOWLS = {
    CLASS_LFUNCTION: ("lfunction", "lfunction.degree", "lfunction.conductor",
                      "lfunction.criticalline"),
    CLASS_ELLIPTIC_CURVE: ("ec.q", "lfunction", "ec.reduction"),
    CLASS_NUMBER_FIELD: ("nf.field", "nf.dedekindzeta"),
    CLASS_CHARACTER: ("character.dirichlet", "character.label"),
}


def _error(status: int, code: str, message: str, **extra) -> JSONResponse:
    return JSONResponse({"code": code, "message": message, **extra}, status_code=status)


def not_found(message: str) -> JSONResponse:
    return _error(404, "not_found", message)


def bad_request(message: str, **extra) -> JSONResponse:
    return _error(400, "bad_request", message, **extra)


def _knowl_refs(store: Store, cls: str) -> list[dict]:
    return [
        {"id": kid, "resolved": latest_version(store, kid) is not None}
        for kid in PAGE_KNOWLS.get(cls, ())
    ]


def _related_json(store: Store, label: str, cls: str) -> list[dict]:
    related = link_objects(store, label, cls)
    return [
        {
            "relation": r.name,
            "target_class": r.target_class,
            "target_label": r.target_label,
            "url": r.target_url,
            "resolved": r.resolved,
            "note": None if r.resolved else "not yet in database",
        }
        for r in related.relations
    ]


def _downloads(cls: str, label: str) -> list[dict]:
    return [{
        "name": "reconstruction snippet",
        "url": f"/api/download/{cls}/{label}",
    }]


def _prop(name: str, value, source: str = "stored") -> dict:
    return {"name": name, "value": value, "source": source}


def _lfunction_for_plot(store: Store, record: dict):
    """Rebuild a light LFunction for on-the-fly critical-line sampling."""
    if record["kind"] == KIND_ZETA:
        return riemann_zeta_lfunction(10)
    if record["kind"] == KIND_DIRICHLET and record.get("self_dual"):
        origin = record.get("origin", "")
        if origin.startswith("Character:"):
            char_rec = store.get("characters", origin.split(":", 1)[1])
            chi = character_from_exponents(
                char_rec["modulus"], tuple(char_rec["exponent_vector"]))
            return character_lfunction(chi, 10)
    return None


def _stored_zeros(store: Store, lf_label: str, limit: int = 10) -> list[dict]:
    rows = store.query(
        "zeros", [Filter.eq("lfunction_label", lf_label)],
        sort="ordinate", limit=limit)
    return [
        {"t": r["ordinate"], "decimal": r["ordinate_decimal"],
         "precision_exponent": r["precision_exponent"]}
        for r in rows
    ]


def _recomputed_euler_factors(store: Store, record: dict, prime_bound: int = 20) -> list[dict]:
    """Local factors at small primes, recomputed from the origin object."""
    from .arith import sieve_primes

    origin = record.get("origin", "")
    out = []
    if record["kind"] == KIND_ZETA:
        for p in sieve_primes(prime_bound):
            out.append({"p": p, "factor": "1 - T"})
    elif record["kind"] == KIND_DIRICHLET and origin.startswith("Character:"):
        char_rec = store.get("characters", origin.split(":", 1)[1])
        chi = character_from_exponents(
            char_rec["modulus"], tuple(char_rec["exponent_vector"]))
        for p in sieve_primes(prime_bound):
            v = char_eval(chi, p)
            if v == 0:
                out.append({"p": p, "factor": "1"})
            elif v == 1:
                out.append({"p": p, "factor": "1 - T"})
            elif v == -1:
                out.append({"p": p, "factor": "1 + T"})
            else:
                out.append({"p": p, "factor": f"1 - {v.display()} T"})
    elif origin.startswith("EllipticCurve:"):
        from .arith import ec_ap
        from .arith.elliptic import GOOD

        curve_rec = store.get("elliptic_curves_q", origin.split(":", 1)[1])
        curve = make_curve(curve_rec["ainvs"], int(curve_rec["conductor"]))
        for p in sieve_primes(prime_bound):
            red = ec_ap(curve, p)
            if red.kind == GOOD:
                sign = "-" if red.ap >= 0 else "+"
                out.append({
                    "p": p,
                    "factor": f"1 {sign} {abs(red.ap)} T + {p} T^2"
                    if red.ap else f"1 + {p} T^2",
                })
            elif red.ap:
                out.append({"p": p, "factor": "1 - T" if red.ap == 1 else "1 + T"})
            else:
                out.append({"p": p, "factor": "1"})
    elif origin.startswith("NumberField:"):
        from .arith import kronecker

        nf = nf_view(store.get("number_fields", origin.split(":", 1)[1]))
        disc = nf.disc_sign * int(nf.abs_disc)
        for p in sieve_primes(prime_bound):
            k = kronecker(disc, p)
            factor = {1: "(1 - T)^2", 0: "1 - T", -1: "1 - T^2"}[k]
            out.append({"p": p, "factor": factor})
    return out


def create_app(store: Store) -> FastAPI:
    app = FastAPI(title="lfuncdb", docs_url=None, redoc_url=None)

    @app.exception_handler(RequestValidationError)
    async def _validation_handler(request: Request, exc: RequestValidationError):
        return bad_request("malformed request parameters")

    @app.middleware("http")
    async def single_writer_guard(request: Request, call_next):
        if store.root is not None and write_locked_by_other(store.root):
            return _error(503, "busy",
                          "a build job holds the data directory; retry shortly")
        return await call_next(request)

    # ----------------------------------------------------------------- misc

    @app.get("/api/health")
    def health():
        return {
            "status": "ok",
            "collections": {
                name: store.count(name) for name in sorted(store.collections)
            },
        }

    # ------------------------------------------------------------ homepages

    @app.get("/api/L/{label:path}")
    def lfunction_homepage(label: str, points: int = DEFAULT_PLOT_POINTS,
                           t_max: float | None = None):
        try:
            record = store.get("lfunctions", label)
        except NotFoundError:
            return not_found(f"no L-function under label {label!r}")
        if not 1 <= points <= MAX_PLOT_POINTS:
            return bad_request(f"points must lie in 1..{MAX_PLOT_POINTS}")
        if t_max is None:
            # default the plot window to the stored zero-scan ceiling so the
            # graph's sign changes match the zero table on the same page
            t_max = float(record.get("zeros_to", 30.0))
        props = [
            _prop("degree", record["degree"]),
            _prop("conductor", record["conductor"]),
            _prop("weight", record["weight"]),
            _prop("parity", "even" if record["parity"] == 0 else "odd"),
            _prop("self-dual", record["self_dual"]),
            _prop("critical line", f"Re(s) = {record['critical_line']}"),
            _prop("kind", record["kind"]),
        ]
        if "root_re" in record:
            props.append(_prop("root number",
                               f"{record['root_re']:g}"
                               + (f" + {record['root_im']:g} i"
                                  if record.get("root_im") else "")))
        n0 = record["conductor"]
        a = record["parity"]
        if record["kind"] == KIND_ZETA:
            fe = "Lambda(s) = pi^(-s/2) Gamma(s/2) L(s) = Lambda(1-s)"
        elif record["degree"] == 1:
            fe = (f"Lambda(s) = ({n0}/pi)^((s+{a})/2) Gamma((s+{a})/2) L(s) "
                  f"= eps conj(Lambda(1-conj(s)))")
        else:
            fe = "functional equation data not computed at desk scale"
        props.append(_prop("functional equation", fe, source="computed"))

        doc = {
            "label": label,
            "class": CLASS_LFUNCTION,
            "title": f"L-function {label}",
            "url": object_url(CLASS_LFUNCTION, label),
            "properties": props,
            "coefficients": record["coeffs"][:30],
            "euler_factors": _recomputed_euler_factors(store, record),
            "related_objects": _related_json(store, label, CLASS_LFUNCTION),
            "downloads": _downloads(CLASS_LFUNCTION, label),
            "knowls": _knowl_refs(store, CLASS_LFUNCTION),
            "zeros": _stored_zeros(store, label),
        }
        lf = _lfunction_for_plot(store, record)
        if lf is not None:
            samples = critical_line_samples(lf, t_max, points)
            doc["plot"] = {
                "t": [t for t, _ in samples],
                "z": [z for _, z in samples],
                "zero_markers": [
                    z["t"] for z in _stored_zeros(store, label, limit=100)
                    if z["t"] <= t_max
                ],
            }
        else:
            doc["plot"] = None
        return doc

    @app.get("/api/EllipticCurve/Q/{cond}/{iso}/{num}")
    def curve_homepage(cond: str, iso: str, num: str):
        try:
            ec = parse_ec_label(f"{cond}/{iso}/{num}")
        except LabelError as exc:
            return bad_request(str(exc))
        label = f"{ec.conductor}{ec.isogeny_class}{ec.curve_number}"
        try:
            record = store.get("elliptic_curves_q", label)
        except NotFoundError:
            return not_found(f"no elliptic curve under label {label!r}")
        view = ec_view(record)
        curve = view.curve()
        torsion = (" x ".join(f"Z/{n}Z" for n in view.torsion_structure)
                   if view.torsion_structure else "trivial")
        props = [
            _prop("Weierstrass equation", weierstrass_text(view.ainvs), "computed"),
            _prop("conductor", view.conductor),
            _prop("rank", view.rank),
            _prop("torsion subgroup", torsion),
            _prop("discriminant", str(curve.discriminant), "computed"),
        ]
        from .arith import ec_ap, sieve_primes

        ap_row = {str(p): ec_ap(curve, p).ap for p in sieve_primes(20)}
        doc = {
            "label": label,
            "class": CLASS_ELLIPTIC_CURVE,
            "title": f"Elliptic curve {label} over Q",
            "url": object_url(CLASS_ELLIPTIC_CURVE, label),
            "properties": props,
            "ap": {"values": ap_row, "source": "computed"},
            "related_objects": _related_json(store, label, CLASS_ELLIPTIC_CURVE),
            "downloads": _downloads(CLASS_ELLIPTIC_CURVE, label),
            "knowls": _knowl_refs(store, CLASS_ELLIPTIC_CURVE),
        }
        if view.historical_note:
            doc["historical_note"] = view.historical_note
        return doc

    @app.get("/api/NumberField/{label}")
    def number_field_homepage(label: str):
        try:
            parse_nf_label(label)
        except LabelError as exc:
            return bad_request(str(exc))
        try:
            record = store.get("number_fields", label)
        except NotFoundError:
            return not_found(f"no number field under label {label!r}")
        view = nf_view(record)
        props = [
            _prop("defining polynomial", polynomial_text(view.coeffs), "computed"),
            _prop("degree", view.degree),
            _prop("signature", f"{view.signature[0]},{view.signature[1]}"),
            _prop("discriminant", view.discriminant_text),
            _prop("class_number", view.class_number),
            _prop("class group", view.class_group or "trivial"),
            _prop("galois group", f"{view.galois_n}T{view.galois_t}"),
            _prop("ramified primes", ", ".join(view.ramps)),
        ]
        return {
            "label": label,
            "class": CLASS_NUMBER_FIELD,
            "title": f"Number field {label}",
            "url": object_url(CLASS_NUMBER_FIELD, label),
            "properties": props,
            "related_objects": _related_json(store, label, CLASS_NUMBER_FIELD),
            "downloads": _downloads(CLASS_NUMBER_FIELD, label),
            "knowls": _knowl_refs(store, CLASS_NUMBER_FIELD),
        }

    @app.get("/api/Character/Dirichlet/{modulus}/{index}")
    def character_homepage(modulus: str, index: str):
        if not modulus.isdigit() or not index.isdigit():
            return bad_request("character URL components must be integers")
        label = f"{int(modulus)}.{int(index)}"
        try:
            record = store.get("characters", label)
        except NotFoundError:
            return not_found(f"no character under label {label!r}")
        chi = character_from_exponents(
            record["modulus"], tuple(record["exponent_vector"]))
        n = record["modulus"]
        values = []
        for k in range(min(n, 12) if n > 1 else 2):
            v = char_eval(chi, k)
            values.append({"n": k, "value": "0" if v == 0 else v.display()})
        props = [
            _prop("modulus", record["modulus"]),
            _prop("conductor", record["conductor"]),
            _prop("order", record["order"]),
            _prop("parity", "even" if record["parity"] == 0 else "odd"),
            _prop("primitive", record["primitive"]),
        ]
        return {
            "label": label,
            "class": CLASS_CHARACTER,
            "title": f"Dirichlet character {label}",
            "url": object_url(CLASS_CHARACTER, label),
            "properties": props,
            "values": {"table": values, "source": "computed"},
            "related_objects": _related_json(store, label, CLASS_CHARACTER),
            "downloads": _downloads(CLASS_CHARACTER, label),
            "knowls": _knowl_refs(store, CLASS_CHARACTER),
        }

    # --------------------------------------------------------------- search

    @app.post("/api/search/{collection}")
    def search(collection: str, body: dict):
        schema = SEARCH_SCHEMAS.get(collection)
        if schema is None:
            return not_found(f"collection {collection!r} is not searchable")
        raw_filters = body.get("filters", {})
        if not isinstance(raw_filters, dict):
            return bad_request("filters must be a map of field -> value")
        filters: list[Filter] = []
        for fname, spec in raw_filters.items():
            if fname not in schema:
                return bad_request(
                    f"unknown search field {fname!r}",
                    valid_fields=sorted(schema))
            allowed = schema[fname]["forms"]
            ftype = schema[fname]["type"]

            def norm(v):
                if ftype == "bigint":
                    return str(v)
                if ftype == "text_element":
                    return str(v)
                return v

            if isinstance(spec, dict) and ("min" in spec or "max" in spec):
                if "range" not in allowed:
                    return bad_request(f"field {fname!r} does not support ranges",
                                       valid_fields=sorted(schema))
                if "min" not in spec or "max" not in spec:
                    return bad_request("range filters need both min and max")
                filters.append(Filter.range(fname, norm(spec["min"]), norm(spec["max"])))
            elif isinstance(spec, dict) and "contains" in spec:
                if "contains" not in allowed:
                    return bad_request(
                        f"field {fname!r} does not support contains",
                        valid_fields=sorted(schema))
                filters.append(Filter.contains(fname, norm(spec["contains"])))
            elif "contains" in allowed and not isinstance(spec, dict):
                filters.append(Filter.contains(fname, norm(spec)))
            elif "eq" in allowed and not isinstance(spec, dict):
                filters.append(Filter.eq(fname, norm(spec)))
            else:
                return bad_request(f"unsupported filter form for {fname!r}",
                                   valid_fields=sorted(schema))
        sort = body.get("sort")
        if sort is not None and sort != "label" and sort not in schema:
            return bad_request(f"cannot sort by {sort!r}", valid_fields=sorted(schema))
        page = body.get("page", 1)
        page_size = body.get("page_size", 20)
        if not isinstance(page, int) or not isinstance(page_size, int) \
                or page < 1 or not 1 <= page_size <= 200:
            return bad_request("page must be >= 1 and 1 <= page_size <= 200")
        try:
            matched = store.query(collection, filters, sort=sort)
        except UnsupportedFilterError as exc:
            return bad_request(str(exc))
        total = len(matched)
        rows = matched[(page - 1) * page_size : page * page_size]
        cls = CLASS_OF_COLLECTION[collection]
        results = []
        for record in rows:
            row = {"label": record["label"],
                   "url": object_url(cls, record["label"])}
            for fname in SUMMARY_FIELDS[collection]:
                if fname in record:
                    row[fname] = record[fname]
            results.append(row)
        return {
            "collection": collection,
            "total": total,
            "page": page,
            "page_size": page_size,
            "results": results,
        }

    # ---------------------------------------------------------------- zeros

    @app.get("/api/zeros/zeta")
    def zeta_zeros(request: Request):
        params = request.query_params
        try:
            start = float(params.get("from", 0.0))
            count = int(params.get("count", 10))
        except ValueError:
            return bad_request("from must be a number, count an integer")
        if start < 0:
            return bad_request("from must be >= 0")
        if not 1 <= count <= MAX_ZERO_PAGE:
            return bad_request(f"count must lie in 1..{MAX_ZERO_PAGE}")
        rows = store.query(
            "zeros",
            [Filter.eq("lfunction_label", "Riemann"),
             Filter.range("ordinate", start, 1e300)],
            sort="ordinate",
            limit=count,
        )
        return {
            "lfunction": "Riemann",
            "from": start,
            "zeros": [
                {"t": r["ordinate"], "decimal": r["ordinate_decimal"],
                 "precision_exponent": r["precision_exponent"]}
                for r in rows
            ],
        }

    # ------------------------------------------------------------ downloads

    @app.get("/api/download/{cls}/{label:path}")
    def download(cls: str, label: str):
        if cls == CLASS_ELLIPTIC_CURVE:
            try:
                ec = parse_ec_label(label)
                label = f"{ec.conductor}{ec.isogeny_class}{ec.curve_number}"
            except LabelError as exc:
                return bad_request(str(exc))
        try:
            text = reconstruction_snippet(store, label, cls)
        except KeyError as exc:
            if isinstance(exc, NotFoundError):
                return not_found(f"no {cls} under label {label!r}")
            return not_found(str(exc))
        return PlainTextResponse(text)

    # --------------------------------------------------------------- knowls

    def _render(knowl_id: str, depth: int):
        if not 0 <= depth <= 5:
            return bad_request("depth must lie in 0..5")
        try:
            return render_knowl(store, knowl_id, depth)
        except NotFoundError:
            return not_found(f"no knowl with id {knowl_id!r}")

    @app.get("/api/knowl/{knowl_id:path}")
    def knowl_endpoint(knowl_id: str, depth: int = 2):
        return _render(knowl_id, depth)

    @app.get("/knowledge/show/{knowl_id:path}")
    def knowledge_show(knowl_id: str, depth: int = 2):
        return _render(knowl_id, depth)

    @app.post("/api/knowl/{knowl_id:path}")
    def knowl_save(knowl_id: str, body: dict):
        for field in ("title", "content", "author"):
            if not isinstance(body.get(field), str):
                return bad_request(f"knowl save needs text field {field!r}")
        if store.root is not None:
            try:
                lock = WriterLock(store.root).acquire()
            except StoreLockedError:
                return _error(503, "busy", "another writer holds the store")
        else:
            lock = None
        try:
            knowl = save_knowl(store, knowl_id, body["title"], body["content"],
                               body["author"])
        except KnowlValidationError as exc:
            return bad_request(str(exc))
        finally:
            if lock is not None:
                lock.release()
        return {"id": knowl.id, "version": knowl.version}

    return app
