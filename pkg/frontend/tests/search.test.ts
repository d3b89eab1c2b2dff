import { describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import {
  BROWSE_QUERIES,
  buildRequest,
  renderBrowsePage,
  renderSearchPage,
  searchForm,
  setEntry,
  totalPages,
} from "../src/pages/search.js";
import type { HomepageDocument, SearchResult } from "../src/types.js";
import { findByClass, textContent } from "../src/vnode.js";
import { fixture, mockFetch } from "./helpers.js";

const rank2 = fixture<SearchResult>("search_curves_rank2");
const allCurves = fixture<SearchResult>("search_curves_all");
const allFields = fixture<SearchResult>("search_fields_all");
const primChars = fixture<SearchResult>("search_chars_primitive");

// the homepage fixtures double as the resolvable-URL universe
const resolvable = new Set(
  ["riemann", "curve_5077a1", "nf_31231", "char_4_2"].map(
    (n) => fixture<HomepageDocument>(n).url,
  ),
);

describe("canned browse queries", () => {
  it("issue exactly their documented filters", async () => {
    const { fetch, requests } = mockFetch({
      "/api/search/elliptic_curves_q": { body: rank2 },
    });
    const api = new ApiClient(fetch);
    const canned = BROWSE_QUERIES.find((q) => q.title.includes("rank 2"))!;
    await api.search(canned.collection, canned.request);
    expect(requests).toHaveLength(1);
    expect(requests[0].method).toBe("POST");
    expect(requests[0].url).toBe("/api/search/elliptic_curves_q");
    expect(requests[0].body).toEqual({ filters: { rank: 2 } });
  });

  it("cover every searchable collection and render as one-click links", () => {
    const collections = new Set(BROWSE_QUERIES.map((q) => q.collection));
    expect(collections).toEqual(
      new Set(["elliptic_curves_q", "number_fields", "characters"]));
    const view = renderBrowsePage();
    expect(findByClass(view, "canned-query")).toHaveLength(BROWSE_QUERIES.length);
  });
});

describe("search results", () => {
  it("every result row links to an object homepage URL", () => {
    for (const result of [rank2, allCurves, allFields, primChars]) {
      for (const row of result.results) {
        expect(row.url).toMatch(/^\/api\//);
      }
    }
    // the spot-checked fixtures resolve to real homepages
    expect(resolvable.has("/api/EllipticCurve/Q/5077/a/1")).toBe(true);
    const urls = allCurves.results.map((r) => r.url);
    expect(urls).toContain("/api/EllipticCurve/Q/5077/a/1");
  });

  it("rendered rows carry homepage links", () => {
    let state = searchForm("elliptic_curves_q");
    state = { ...state, result: rank2 };
    const view = renderSearchPage(state);
    const links = findByClass(view, "result-link");
    expect(links).toHaveLength(rank2.results.length);
    expect(links[0].attrs["href"]).toBe(
      `#${rank2.results[0].url.replace(/^\/api/, "")}`);
  });

  it("empty results show an explicit no-matches state", () => {
    let state = searchForm("number_fields");
    state = {
      ...state,
      result: { collection: "number_fields", total: 0, page: 1, page_size: 20,
                results: [] },
    };
    const view = renderSearchPage(state);
    expect(findByClass(view, "no-matches")).toHaveLength(1);
    expect(textContent(view)).toContain("no matches");
  });

  it("pagination honors the API total count", () => {
    expect(totalPages({ ...allCurves, total: 45, page_size: 20 })).toBe(3);
    expect(totalPages({ ...allCurves, total: 40, page_size: 20 })).toBe(2);
    expect(totalPages({ ...allCurves, total: 0, page_size: 20 })).toBe(1);
    let state = searchForm("elliptic_curves_q");
    state = { ...state, result: { ...rank2, total: 61, page: 2, page_size: 20 } };
    expect(textContent(renderSearchPage(state))).toContain("page 2 of 4");
  });
});

describe("search form", () => {
  it("builds typed filters from the entered text", () => {
    let state = searchForm("elliptic_curves_q");
    state = setEntry(state, "rank", "2");
    state = setEntry(state, "conductor.min", "1");
    state = setEntry(state, "conductor.max", "1000");
    expect(buildRequest(state)).toEqual({
      filters: { rank: 2, conductor: { min: "1", max: "1000" } },
      page: 1,
      page_size: 20,
    });
    let fields = searchForm("number_fields");
    fields = setEntry(fields, "ramps", "23");
    expect(buildRequest(fields).filters).toEqual({ ramps: { contains: "23" } });
    let chars = searchForm("characters");
    chars = setEntry(chars, "primitive", "true");
    expect(buildRequest(chars).filters).toEqual({ primitive: true });
  });

  it("round-trips entered values through re-render (back navigation)", () => {
    let state = searchForm("elliptic_curves_q");
    state = setEntry(state, "rank", "2");
    state = setEntry(state, "conductor.min", "37");
    const view = renderSearchPage(state);
    const inputs = findByClass(view, "filter-input");
    const byName = Object.fromEntries(inputs.map((i) => [i.attrs["name"], i.attrs["value"]]));
    expect(byName["rank"]).toBe("2");
    expect(byName["conductor.min"]).toBe("37");
    expect(byName["conductor.max"]).toBe("");
  });

  it("API 400 surfaces as an inline field error", () => {
    let state = searchForm("number_fields");
    state = { ...state, errors: { degree: "unknown search field" } };
    const view = renderSearchPage(state);
    const errors = findByClass(view, "field-error");
    expect(errors).toHaveLength(1);
    expect(textContent(errors[0])).toContain("unknown search field");
  });

  it("rejects unknown collections outright", () => {
    expect(() => searchForm("modular_forms")).toThrow(/unknown searchable/);
  });
});
