"""The knowledge database: versioned glossary entries served for inline
expansion.

A knowl is a titled piece of text stored in the database itself, addressed
by a dotted lowercase id ("lfunction.degree").  Content may include other
knowls with the syntax

    {{knowl:some.id|display text}}

Rendering resolves inclusions into expandable stub nodes down to a chosen
depth; deeper references, and any reference that would re-enter an
ancestor (a cycle), come back as plain links, so rendering always
terminates.  Every save creates a new version; prior versions stay
retrievable, but the public API exposes only the latest.
"""

from __future__ import annotations

import datetime
import re
from dataclasses import dataclass

from .store import Filter, NotFoundError, Store

ID_RE = re.compile(r"^[a-z0-9]+(\.[a-z0-9]+)*$")
_INCLUSION_RE = re.compile(r"\{\{knowl:([^|{}]+)\|([^{}]*)\}\}")


class KnowlValidationError(ValueError):
    """Bad id or unparseable inclusion syntax."""


@dataclass(frozen=True)
class Knowl:
    id: str
    title: str
    content: str
    version: int
    timestamp: str
    author: str


def parse_content(content: str) -> list[tuple[str, str]]:
    """Split content into ("text", chunk) and ("ref", "id|display") parts.

    Raises KnowlValidationError on stray or malformed {{...}} blocks."""
    parts: list[tuple[str, str]] = []
    pos = 0
    for m in _INCLUSION_RE.finditer(content):
        if m.start() > pos:
            parts.append(("text", content[pos : m.start()]))
        ref_id, display = m.group(1), m.group(2)
        if not ID_RE.match(ref_id):
            raise KnowlValidationError(f"invalid knowl id in inclusion: {ref_id!r}")
        parts.append(("ref", f"{ref_id}|{display}"))
        pos = m.end()
    tail = content[pos:]
    if "{{" in tail or "}}" in tail:
        raise KnowlValidationError("unbalanced or malformed {{knowl:...}} block")
    if tail:
        parts.append(("text", tail))
    return parts


def referenced_ids(content: str) -> list[str]:
    return [part.split("|", 1)[0] for kind, part in parse_content(content) if kind == "ref"]


def _record_to_knowl(record: dict) -> Knowl:
    return Knowl(
        id=record["knowl_id"],
        title=record["title"],
        content=record["content"],
        version=record["version"],
        timestamp=record["timestamp"],
        author=record["author"],
    )


def latest_version(store: Store, knowl_id: str) -> Knowl | None:
    rows = store.query("knowls", [Filter.eq("knowl_id", knowl_id)], sort="version")
    return _record_to_knowl(rows[-1]) if rows else None


def get_knowl(store: Store, knowl_id: str, version: int | None = None) -> Knowl:
    if version is None:
        knowl = latest_version(store, knowl_id)
        if knowl is None:
            raise NotFoundError(knowl_id)
        return knowl
    return _record_to_knowl(store.get("knowls", f"{knowl_id}@v{version:06d}"))


def save_knowl(
    store: Store,
    knowl_id: str,
    title: str,
    content: str,
    author: str,
    timestamp: str | None = None,
) -> Knowl:
    """Validate and store a new version (previous + 1, or 1)."""
    if not ID_RE.match(knowl_id):
        raise KnowlValidationError(
            f"knowl id must be dotted lowercase [a-z0-9], got {knowl_id!r}")
    parse_content(content)  # raises on bad inclusion syntax
    prior = latest_version(store, knowl_id)
    version = 1 if prior is None else prior.version + 1
    if timestamp is None:
        timestamp = (
            datetime.datetime.now(datetime.timezone.utc)
            .strftime("%Y-%m-%dT%H:%M:%SZ")
        )
    record = {
        "label": f"{knowl_id}@v{version:06d}",
        "knowl_id": knowl_id,
        "version": version,
        "author": author,
        "timestamp": timestamp,
        "title": title,
        "content": content,
    }
    store.put("knowls", record)
    return _record_to_knowl(record)


def render_knowl(store: Store, knowl_id: str, depth: int = 2) -> dict:
    """Document tree with inclusions expanded to stubs down to `depth`.

    Node kinds: {"type": "text", "text"}, {"type": "stub", id, title,
    nodes} for an expanded inclusion, {"type": "link", id, title} for a
    reference beyond the depth or back into an ancestor (cycle rule), and
    broken stubs are flagged {"type": "stub", broken: true}.  Raises
    NotFoundError only for the root id."""
    root = latest_version(store, knowl_id)
    if root is None:
        raise NotFoundError(knowl_id)

    def render(knowl: Knowl, remaining: int, ancestors: frozenset[str]) -> dict:
        nodes: list[dict] = []
        for kind, part in parse_content(knowl.content):
            if kind == "text":
                nodes.append({"type": "text", "text": part})
                continue
            ref_id, display = part.split("|", 1)
            target = latest_version(store, ref_id)
            if target is None:
                nodes.append({
                    "type": "stub", "id": ref_id, "display": display,
                    "title": None, "broken": True, "nodes": [],
                })
                continue
            if ref_id in ancestors or remaining <= 0:
                nodes.append({
                    "type": "link", "id": ref_id, "display": display,
                    "title": target.title,
                })
                continue
            child = render(target, remaining - 1, ancestors | {ref_id})
            nodes.append({
                "type": "stub", "id": ref_id, "display": display,
                "title": target.title, "broken": False,
                "nodes": child["nodes"],
            })
        return {
            "type": "knowl",
            "id": knowl.id,
            "title": knowl.title,
            "version": knowl.version,
            "nodes": nodes,
        }

    return render(root, depth, frozenset({knowl_id}))
