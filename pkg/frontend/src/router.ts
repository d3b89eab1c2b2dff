/**
 * Hash router: every page state the UI can click into has a URL, and the
 * URL alone reproduces the state (deep-linkability on permanent labels).
 */

export type Route =
  | { kind: "browse" }
  | { kind: "canned"; index: number }
  | { kind: "search"; collection: string }
  | { kind: "homepage"; apiUrl: string; label: string }
  | { kind: "knowl"; id: string };

const HOMEPAGE_PREFIXES = ["/L/", "/EllipticCurve/", "/NumberField/", "/Character/"];

export function parseRoute(hash: string): Route {
  const path = hash.replace(/^#/, "") || "/";
  if (path === "/" || path === "/browse") return { kind: "browse" };
  const canned = path.match(/^\/browse\/(\d+)$/);
  if (canned) return { kind: "canned", index: parseInt(canned[1], 10) };
  const search = path.match(/^\/search\/([a-z_]+)$/);
  if (search) return { kind: "search", collection: search[1] };
  const knowl = path.match(/^\/knowledge\/show\/([a-z0-9.]+)$/);
  if (knowl) return { kind: "knowl", id: knowl[1] };
  for (const prefix of HOMEPAGE_PREFIXES) {
    if (path.startsWith(prefix)) {
      const label = path.slice(prefix.length).replace(/\/$/, "");
      return { kind: "homepage", apiUrl: `/api${path}`, label };
    }
  }
  return { kind: "browse" };
}

export function formatRoute(route: Route): string {
  switch (route.kind) {
    case "browse":
      return "#/";
    case "canned":
      return `#/browse/${route.index}`;
    case "search":
      return `#/search/${route.collection}`;
    case "homepage":
      return `#${route.apiUrl.replace(/^\/api/, "")}`;
    case "knowl":
      return `#/knowledge/show/${route.id}`;
  }
}
