import { describe, expect, it } from "vitest";

import { dismiss, expand, knowlView, renderKnowl, toggle } from "../src/pages/knowl.js";
import type { KnowlDocument } from "../src/types.js";
import { findAll, findByClass, textContent } from "../src/vnode.js";
import { fixture } from "./helpers.js";

const lfunctionDoc = fixture<KnowlDocument>("knowl_lfunction");
const cycleDoc = fixture<KnowlDocument>("knowl_cycle");
const brokenDoc = fixture<KnowlDocument>("knowl_broken");

function firstStubPath(doc: KnowlDocument): string {
  const i = doc.nodes.findIndex((n) => n.type === "stub");
  expect(i).toBeGreaterThanOrEqual(0);
  return String(i);
}

describe("knowl expansion", () => {
  it("expand then dismiss restores the page text content", () => {
    let state = knowlView(lfunctionDoc);
    const before = textContent(renderKnowl(state));
    const path = firstStubPath(lfunctionDoc);

    state = expand(state, path);
    const during = textContent(renderKnowl(state));
    expect(during).not.toEqual(before);
    expect(during.length).toBeGreaterThan(before.length);

    state = dismiss(state, path);
    expect(textContent(renderKnowl(state))).toEqual(before);
  });

  it("expansion inserts the referenced content below the anchor", () => {
    let state = knowlView(lfunctionDoc);
    const path = firstStubPath(lfunctionDoc);
    state = expand(state, path);
    const view = renderKnowl(state);
    const expansions = findByClass(view, "knowl-expansion");
    expect(expansions).toHaveLength(1);
    // the expansion carries the target knowl's title
    expect(textContent(expansions[0])).toContain("Degree");
  });

  it("two stubs open simultaneously without interference", () => {
    const stubPaths = lfunctionDoc.nodes
      .map((n, i) => (n.type === "stub" ? String(i) : null))
      .filter((p): p is string => p !== null);
    expect(stubPaths.length).toBeGreaterThanOrEqual(2);
    let state = knowlView(lfunctionDoc);
    state = expand(state, stubPaths[0]);
    state = expand(state, stubPaths[1]);
    expect(findByClass(renderKnowl(state), "knowl-expansion")).toHaveLength(2);
    // dismissing one leaves the other open
    state = dismiss(state, stubPaths[0]);
    expect(findByClass(renderKnowl(state), "knowl-expansion")).toHaveLength(1);
  });

  it("cyclic references arrive as links and never expand", () => {
    // cyc.a includes cyc.b which includes cyc.a again: the API's cycle
    // rule renders the back-reference as a link node
    let state = knowlView(cycleDoc);
    const path = firstStubPath(cycleDoc);
    state = expand(state, path);
    const view = renderKnowl(state);
    const links = findByClass(view, "knowl-link");
    expect(links.length).toBeGreaterThanOrEqual(1);
    expect(links[0].attrs["data-knowl"]).toBe("cyc.a");
    // a link is an <a href> to the knowl page, not a toggle target
    expect(links[0].attrs["href"]).toBe("#/knowledge/show/cyc.a");
    // toggling the link's path is a no-op on rendered text (no stub there)
    const before = textContent(view);
    const toggled = toggle(state, `${path}.999`);
    expect(textContent(renderKnowl(toggled))).toEqual(before);
  });

  it("broken references render a flagged placeholder", () => {
    const view = renderKnowl(knowlView(brokenDoc));
    const broken = findByClass(view, "knowl-broken");
    expect(broken).toHaveLength(1);
    expect(textContent(broken[0])).toContain("[missing knowl]");
    expect(broken[0].attrs["data-knowl"]).toBe("missing.id");
  });

  it("dismissing a stub forgets nested expansion state", () => {
    let state = knowlView(cycleDoc);
    const path = firstStubPath(cycleDoc);
    state = expand(state, path);
    state = expand(state, `${path}.3`);
    state = dismiss(state, path);
    expect(state.open.size).toBe(0);
  });

  it("stub anchors carry click handlers when a toggle callback is wired", () => {
    const state = knowlView(lfunctionDoc);
    const clicked: string[] = [];
    const view = renderKnowl(state, (p) => clicked.push(p));
    const anchors = findAll(view, (n) => n.attrs["class"]?.startsWith("knowl-stub") ?? false);
    expect(anchors.length).toBeGreaterThan(0);
    anchors[0].on?.["click"]?.();
    expect(clicked).toEqual([anchors[0].attrs["data-path"]]);
  });
});
