/**
 * Browse and search.
 *
 * Browse is canned: one click fires a documented, pre-filled query with
 * no typing. Search is a typed form whose fields mirror the API's
 * per-collection filter schema. Both produce the same SearchRequest
 * shape, and every result row links to an object homepage.
 */

import type { SearchRequest, SearchResult } from "../types.js";
import { h, VNode } from "../vnode.js";

export interface FieldSpec {
  name: string;
  label: string;
  kind: "int" | "text" | "bool" | "range" | "contains";
}

export const SEARCH_FORMS: Record<string, FieldSpec[]> = {
  elliptic_curves_q: [
    { name: "rank", label: "rank", kind: "int" },
    { name: "conductor", label: "conductor range", kind: "range" },
  ],
  number_fields: [
    { name: "degree", label: "degree", kind: "int" },
    { name: "class_number", label: "class number", kind: "int" },
    { name: "galois_n", label: "Galois degree n", kind: "int" },
    { name: "galois_t", label: "Galois index t", kind: "int" },
    { name: "ramps", label: "ramified at p", kind: "contains" },
    { name: "signature", label: "signature (r1,r2)", kind: "text" },
  ],
  characters: [
    { name: "modulus", label: "modulus", kind: "int" },
    { name: "order", label: "order", kind: "int" },
    { name: "parity", label: "parity (0 even, 1 odd)", kind: "int" },
    { name: "primitive", label: "primitive", kind: "bool" },
  ],
};

export interface CannedQuery {
  title: string;
  collection: string;
  request: SearchRequest;
}

/** the browse section: documented one-click queries, nothing to type */
export const BROWSE_QUERIES: CannedQuery[] = [
  {
    title: "elliptic curves of rank 2",
    collection: "elliptic_curves_q",
    request: { filters: { rank: 2 } },
  },
  {
    title: "elliptic curves of conductor up to 100",
    collection: "elliptic_curves_q",
    request: { filters: { conductor: { min: 1, max: 100 } } },
  },
  {
    title: "cubic number fields",
    collection: "number_fields",
    request: { filters: { degree: 3 } },
  },
  {
    title: "number fields ramified at 23",
    collection: "number_fields",
    request: { filters: { ramps: { contains: "23" } } },
  },
  {
    title: "primitive characters",
    collection: "characters",
    request: { filters: { primitive: true }, page_size: 50 },
  },
  {
    title: "odd characters of order 2",
    collection: "characters",
    request: { filters: { order: 2, parity: 1 } },
  },
];

export interface SearchFormState {
  collection: string;
  /** raw text the user typed, keyed by field (min/max suffixed for ranges) */
  entries: Record<string, string>;
  result: SearchResult | null;
  /** field-level errors from an API 400 */
  errors: Record<string, string>;
  page: number;
  pageSize: number;
}

export function searchForm(collection: string): SearchFormState {
  if (!(collection in SEARCH_FORMS)) {
    throw new Error(`unknown searchable collection: ${collection}`);
  }
  return { collection, entries: {}, result: null, errors: {}, page: 1, pageSize: 20 };
}

export function setEntry(state: SearchFormState, field: string, value: string): SearchFormState {
  return { ...state, entries: { ...state.entries, [field]: value } };
}

/** build the API request from the form entries (empty fields are omitted) */
export function buildRequest(state: SearchFormState): SearchRequest {
  const filters: SearchRequest["filters"] = {};
  for (const spec of SEARCH_FORMS[state.collection]) {
    if (spec.kind === "range") {
      const lo = state.entries[`${spec.name}.min`]?.trim();
      const hi = state.entries[`${spec.name}.max`]?.trim();
      if (lo && hi) filters[spec.name] = { min: lo, max: hi };
      continue;
    }
    const raw = state.entries[spec.name]?.trim();
    if (!raw) continue;
    if (spec.kind === "int") filters[spec.name] = parseInt(raw, 10);
    else if (spec.kind === "bool") filters[spec.name] = raw === "true" || raw === "yes";
    else if (spec.kind === "contains") filters[spec.name] = { contains: raw };
    else filters[spec.name] = raw;
  }
  return { filters, page: state.page, page_size: state.pageSize };
}

export function totalPages(result: SearchResult): number {
  return Math.max(1, Math.ceil(result.total / result.page_size));
}

function formFields(state: SearchFormState): VNode[] {
  return SEARCH_FORMS[state.collection].map((spec) => {
    const error = state.errors[spec.name];
    const inputs: VNode[] =
      spec.kind === "range"
        ? [
            h("input", { name: `${spec.name}.min`, class: "filter-input",
                         value: state.entries[`${spec.name}.min`] ?? "" }),
            h("input", { name: `${spec.name}.max`, class: "filter-input",
                         value: state.entries[`${spec.name}.max`] ?? "" }),
          ]
        : [
            h("input", { name: spec.name, class: "filter-input",
                         value: state.entries[spec.name] ?? "" }),
          ];
    const row: (VNode | string)[] = [h("label", {}, [spec.label]), ...inputs];
    if (error) row.push(h("em", { class: "field-error" }, [error]));
    return h("div", { class: "form-row" }, row);
  });
}

function resultsList(state: SearchFormState): VNode {
  const result = state.result;
  if (result === null) {
    return h("section", { class: "results results-idle" }, []);
  }
  if (result.results.length === 0) {
    return h("section", { class: "results results-empty" }, [
      h("p", { class: "no-matches" }, ["no matches"]),
    ]);
  }
  return h("section", { class: "results" }, [
    h("p", { class: "result-count" }, [`${result.total} matches`]),
    h("ul", {}, result.results.map((row) =>
      h("li", { class: "result-row" }, [
        h("a", { href: `#${row.url.replace(/^\/api/, "")}`, class: "result-link" },
          [row.label]),
      ]),
    )),
    h("nav", { class: "pagination" }, [
      h("span", { class: "page-indicator" },
        [`page ${result.page} of ${totalPages(result)}`]),
    ]),
  ]);
}

export function renderSearchPage(state: SearchFormState): VNode {
  return h("main", { class: "search-page" }, [
    h("h1", {}, [`Search ${state.collection}`]),
    h("form", { class: "search-form", "data-collection": state.collection },
      formFields(state)),
    resultsList(state),
  ]);
}

export function renderBrowsePage(): VNode {
  return h("main", { class: "browse-page" }, [
    h("h1", {}, ["Browse"]),
    h("ul", { class: "canned-queries" }, BROWSE_QUERIES.map((q, i) =>
      h("li", {}, [
        h("a", { href: `#/browse/${i}`, class: "canned-query", "data-index": String(i) },
          [q.title]),
      ]),
    )),
  ]);
}
