/**
 * A minimal virtual node layer.
 *
 * Pages are built as plain VNode trees, so every view function is pure
 * and testable without a DOM; the browser entry point mounts a tree with
 * render(). textContent() mirrors what DOM textContent would report,
 * which is what the expand/dismiss acceptance checks compare.
 */

export interface VNode {
  tag: string;
  attrs: Record<string, string>;
  children: (VNode | string)[];
  /** wired up by the mounting layer; carries UI intents like expand/dismiss */
  on?: Record<string, () => void>;
}

export function h(
  tag: string,
  attrs: Record<string, string> = {},
  children: (VNode | string)[] = [],
  on?: Record<string, () => void>,
): VNode {
  return on ? { tag, attrs, children, on } : { tag, attrs, children };
}

export function textContent(node: VNode | string): string {
  if (typeof node === "string") return node;
  return node.children.map(textContent).join("");
}

/** depth-first search helpers for tests and the mounting layer */
export function findAll(node: VNode, pred: (n: VNode) => boolean): VNode[] {
  const out: VNode[] = [];
  const walk = (n: VNode | string) => {
    if (typeof n === "string") return;
    if (pred(n)) out.push(n);
    n.children.forEach(walk);
  };
  walk(node);
  return out;
}

export function findByClass(node: VNode, cls: string): VNode[] {
  return findAll(node, (n) => (n.attrs["class"] ?? "").split(" ").includes(cls));
}

/** render into a real DOM element (browser only) */
export function render(node: VNode | string, doc: Document): Node {
  if (typeof node === "string") return doc.createTextNode(node);
  const el = doc.createElement(node.tag);
  for (const [k, v] of Object.entries(node.attrs)) el.setAttribute(k, v);
  if (node.on) {
    for (const [event, handler] of Object.entries(node.on)) {
      el.addEventListener(event, handler);
    }
  }
  for (const child of node.children) el.appendChild(render(child, doc));
  return el;
}
