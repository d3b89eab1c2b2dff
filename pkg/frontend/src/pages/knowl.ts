/**
 * Inline knowl expansion.
 *
 * The API hands over a rendered tree whose stubs already carry their
 * (depth-limited) child content; the UI only tracks which stubs are open.
 * Expanding inserts the stub's content right below its anchor; dismissing
 * removes exactly that content again, restoring the prior text. Cycle
 * references arrive as "link" nodes and are never expandable. Broken
 * stubs render a flagged placeholder.
 */

import type { KnowlDocument, KnowlNode } from "../types.js";
import { h, VNode } from "../vnode.js";

/** stub identity: the index path to the node inside the tree, e.g. "1.0" */
export type StubPath = string;

export interface KnowlViewState {
  doc: KnowlDocument;
  open: Set<StubPath>;
}

export function knowlView(doc: KnowlDocument): KnowlViewState {
  return { doc, open: new Set() };
}

export function expand(state: KnowlViewState, path: StubPath): KnowlViewState {
  const open = new Set(state.open);
  open.add(path);
  return { ...state, open };
}

export function dismiss(state: KnowlViewState, path: StubPath): KnowlViewState {
  const open = new Set(state.open);
  // dismissing a stub also forgets the open state of anything nested in it
  for (const p of open) {
    if (p === path || p.startsWith(`${path}.`)) open.delete(p);
  }
  return { ...state, open };
}

export function toggle(state: KnowlViewState, path: StubPath): KnowlViewState {
  return state.open.has(path) ? dismiss(state, path) : expand(state, path);
}

function renderNodes(
  nodes: KnowlNode[],
  state: KnowlViewState,
  prefix: string,
  onToggle?: (path: StubPath) => void,
): (VNode | string)[] {
  return nodes.map((node, i) => {
    const path = prefix === "" ? String(i) : `${prefix}.${i}`;
    if (node.type === "text") return node.text;
    if (node.type === "link") {
      // cycle or beyond-depth reference: a plain link, never expands inline
      return h("a", {
        href: `#/knowledge/show/${node.id}`,
        class: "knowl-link",
        "data-knowl": node.id,
      }, [node.display]);
    }
    if (node.broken) {
      return h("span", { class: "knowl-broken", "data-knowl": node.id },
        [node.display, " ", h("em", {}, ["[missing knowl]"])]);
    }
    const isOpen = state.open.has(path);
    const anchor = h("a", {
      href: "#",
      class: `knowl-stub ${isOpen ? "open" : "closed"}`,
      "data-knowl": node.id,
      "data-path": path,
    }, [node.display], onToggle ? { click: () => onToggle(path) } : undefined);
    if (!isOpen) return anchor;
    return h("span", { class: "knowl-expansion-wrap" }, [
      anchor,
      h("div", { class: "knowl-expansion", "data-path": path }, [
        h("strong", {}, [node.title ?? node.id]),
        h("span", {}, renderNodes(node.nodes, state, path, onToggle)),
        h("a", { href: "#", class: "knowl-dismiss", "data-path": path },
          ["dismiss"], onToggle ? { click: () => onToggle(path) } : undefined),
      ]),
    ]);
  });
}

export function renderKnowl(
  state: KnowlViewState,
  onToggle?: (path: StubPath) => void,
): VNode {
  return h("article", { class: "knowl", "data-knowl-id": state.doc.id }, [
    h("h2", {}, [state.doc.title]),
    h("div", { class: "knowl-body" },
      renderNodes(state.doc.nodes, state, "", onToggle)),
  ]);
}
