import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import type { FetchLike } from "../src/api.js";

const here = dirname(fileURLToPath(import.meta.url));

export function fixture<T>(name: string): T {
  return JSON.parse(readFileSync(join(here, "fixtures", `${name}.json`), "utf-8")) as T;
}

export interface CapturedRequest {
  url: string;
  method: string;
  body: unknown;
}

/** a fetch stub that records requests and replays canned responses */
export function mockFetch(
  routes: Record<string, { status?: number; body: unknown }>,
): { fetch: FetchLike; requests: CapturedRequest[] } {
  const requests: CapturedRequest[] = [];
  const fetchFn: FetchLike = async (url, init) => {
    requests.push({
      url,
      method: init?.method ?? "GET",
      body: init?.body ? JSON.parse(init.body) : undefined,
    });
    const route = routes[url];
    if (!route) {
      return {
        status: 404,
        json: async () => ({ code: "not_found", message: `no route ${url}` }),
      };
    }
    return { status: route.status ?? 200, json: async () => route.body };
  };
  return { fetch: fetchFn, requests };
}
