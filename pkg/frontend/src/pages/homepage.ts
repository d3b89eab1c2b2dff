/**
 * Object homepages: breadcrumbs, property table, related-objects box,
 * downloads, historical note, and (for self-dual degree-1 L-functions)
 * the critical-line graph beside its zero table.
 *
 * Every displayed value is lifted verbatim from the HomepageDocument;
 * the plot is a polyline through the payload's samples.
 */

import { plotGeometry } from "../plot.js";
import type { HomepageDocument } from "../types.js";
import { h, VNode } from "../vnode.js";

/** breadcrumbs reflect the URL path segments, each a deep link */
export function breadcrumbs(url: string): VNode {
  const segments = url.replace(/^\/api\//, "").split("/").filter(Boolean);
  const crumbs: (VNode | string)[] = [h("a", { href: "#/", class: "crumb" }, ["home"])];
  let path = "";
  for (const segment of segments) {
    path += `/${segment}`;
    crumbs.push(" / ");
    crumbs.push(h("a", { href: `#${path}`, class: "crumb" }, [segment]));
  }
  return h("nav", { class: "breadcrumbs" }, crumbs);
}

function propertyTable(doc: HomepageDocument): VNode {
  return h("table", { class: "properties" }, doc.properties.map((p) =>
    h("tr", { class: `prop prop-${p.source}` }, [
      h("th", {}, [p.name]),
      h("td", {}, [String(p.value)]),
    ]),
  ));
}

function relatedBox(doc: HomepageDocument): VNode {
  if (doc.related_objects.length === 0) {
    return h("aside", { class: "related" }, [h("p", {}, ["no related objects"])]);
  }
  return h("aside", { class: "related" }, [
    h("h3", {}, ["Related objects"]),
    h("ul", {}, doc.related_objects.map((rel) =>
      h("li", {}, rel.resolved
        ? [rel.relation, ": ",
           h("a", { href: `#${rel.url.replace(/^\/api/, "")}`, class: "related-link" },
             [rel.target_label])]
        : [rel.relation, ": ", rel.target_label, " ",
           h("em", { class: "pending" }, ["(not yet in database)"])],
      ),
    )),
  ]);
}

function downloadsBox(doc: HomepageDocument): VNode {
  return h("aside", { class: "downloads" }, doc.downloads.map((d) =>
    h("a", { href: d.url, class: "download-link" }, [d.name]),
  ));
}

function zerosTable(doc: HomepageDocument): VNode | null {
  if (!doc.zeros || doc.zeros.length === 0) return null;
  return h("table", { class: "zeros" }, [
    h("tr", {}, [h("th", {}, ["zero ordinate t"])]),
    ...doc.zeros.map((z) => h("tr", { class: "zero-row" }, [h("td", {}, [z.decimal])])),
  ]);
}

function plotSvg(doc: HomepageDocument): VNode | null {
  if (!doc.plot) return null;
  const geom = plotGeometry(doc.plot);
  return h("svg", {
    class: "critical-line-plot",
    viewBox: `0 0 ${geom.width} ${geom.height}`,
    width: String(geom.width),
    height: String(geom.height),
  }, [
    h("line", {
      x1: "0", y1: String(geom.axisY), x2: String(geom.width), y2: String(geom.axisY),
      class: "axis",
    }),
    h("path", { d: geom.path, class: "z-polyline", fill: "none" }),
    ...geom.markers.map((m) =>
      h("circle", { cx: String(m.x), cy: String(geom.axisY), r: "3", class: "zero-marker" }),
    ),
  ]);
}

export function renderHomepage(doc: HomepageDocument): VNode {
  const parts: (VNode | null)[] = [
    breadcrumbs(doc.url),
    h("h1", {}, [doc.title]),
    propertyTable(doc),
  ];
  if (doc.historical_note) {
    parts.push(h("blockquote", { class: "historical-note" }, [doc.historical_note]));
  }
  if (doc.coefficients) {
    parts.push(h("p", { class: "coefficients" },
      ["a_n: ", doc.coefficients.join(", ")]));
  }
  if (doc.values) {
    parts.push(h("table", { class: "char-values" }, doc.values.table.map((row) =>
      h("tr", {}, [h("th", {}, [`chi(${row.n})`]), h("td", {}, [row.value])]),
    )));
  }
  parts.push(plotSvg(doc));
  parts.push(zerosTable(doc));
  parts.push(relatedBox(doc));
  parts.push(downloadsBox(doc));
  parts.push(h("footer", { class: "knowl-refs" },
    doc.knowls.map((k) =>
      h("a", { href: `#/knowledge/show/${k.id}`, class: "knowl-ref" }, [k.id])),
  ));
  return h("main", { class: `homepage homepage-${doc.class}` },
    parts.filter((p): p is VNode => p !== null));
}

/** friendly 404 that keeps the attempted label visible */
export function renderNotFound(attempted: string, message: string): VNode {
  return h("main", { class: "not-found" }, [
    h("h1", {}, ["Not found"]),
    h("p", {}, ["Nothing in the database under ",
      h("code", { class: "attempted-label" }, [attempted]), "."]),
    h("p", { class: "api-message" }, [message]),
    h("a", { href: "#/", class: "crumb" }, ["back to browse"]),
  ]);
}
