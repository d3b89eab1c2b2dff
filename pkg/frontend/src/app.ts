/**
 * Browser entry point: wires the hash router, the API client and the pure
 * page renderers to a real DOM. Everything mathematical arrives over the
 * API; this file only shuttles JSON into views.
 */

import { ApiClient, ApiHttpError } from "./api.js";
import { renderHomepage, renderNotFound } from "./pages/homepage.js";
import { knowlView, renderKnowl, toggle, KnowlViewState } from "./pages/knowl.js";
import {
  BROWSE_QUERIES,
  buildRequest,
  renderBrowsePage,
  renderSearchPage,
  searchForm,
  setEntry,
} from "./pages/search.js";
import { parseRoute } from "./router.js";
import { render, VNode } from "./vnode.js";

const api = new ApiClient((url, init) => fetch(url, init));

function mount(node: VNode): void {
  const root = document.getElementById("app");
  if (!root) return;
  root.replaceChildren(render(node, document));
}

async function showKnowl(id: string): Promise<void> {
  let state: KnowlViewState = knowlView(await api.knowl(id, 3));
  const redraw = () =>
    mount(renderKnowl(state, (path) => {
      state = toggle(state, path);
      redraw();
    }));
  redraw();
}

async function showHomepage(apiUrl: string, label: string): Promise<void> {
  try {
    mount(renderHomepage(await api.homepage(apiUrl)));
  } catch (err) {
    if (err instanceof ApiHttpError && err.status === 404) {
      mount(renderNotFound(label, err.body.message));
      return;
    }
    throw err;
  }
}

async function showCanned(index: number): Promise<void> {
  const canned = BROWSE_QUERIES[index];
  if (!canned) {
    mount(renderBrowsePage());
    return;
  }
  let state = searchForm(canned.collection);
  const result = await api.search(canned.collection, canned.request);
  if (result !== null) state = { ...state, result };
  mount(renderSearchPage(state));
}

async function showSearch(collection: string): Promise<void> {
  let state = searchForm(collection);
  const redraw = () => {
    const view = renderSearchPage(state);
    mount(view);
    const form = document.querySelector(".search-form");
    form?.querySelectorAll("input").forEach((input) => {
      input.addEventListener("change", () => {
        state = setEntry(state, input.name, input.value);
      });
    });
    form?.addEventListener("submit", async (event) => {
      event.preventDefault();
      try {
        const result = await api.search(collection, buildRequest(state));
        if (result !== null) {
          state = { ...state, result, errors: {} };
          redraw();
        }
      } catch (err) {
        if (err instanceof ApiHttpError && err.status === 400) {
          state = { ...state, errors: { _form: err.body.message } };
          redraw();
        } else throw err;
      }
    });
  };
  redraw();
}

async function navigate(): Promise<void> {
  const route = parseRoute(window.location.hash);
  switch (route.kind) {
    case "browse":
      mount(renderBrowsePage());
      break;
    case "canned":
      await showCanned(route.index);
      break;
    case "search":
      await showSearch(route.collection);
      break;
    case "homepage":
      await showHomepage(route.apiUrl, route.label);
      break;
    case "knowl":
      await showKnowl(route.id);
      break;
  }
}

window.addEventListener("hashchange", () => void navigate());
window.addEventListener("DOMContentLoaded", () => void navigate());
