/**
 * Typed client for the lfuncdb JSON API.
 *
 * All traffic goes through one fetch-like function (injected, so tests
 * capture requests), and responses are sequenced per slot: when several
 * requests race on the same slot (e.g. rapid search submissions), only
 * the latest one's response is delivered; stale ones are discarded.
 */

import type {
  ApiError,
  HomepageDocument,
  KnowlDocument,
  SearchRequest,
  SearchResult,
  ZeroRow,
} from "./types.js";

export type FetchLike = (url: string, init?: {
  method?: string;
  headers?: Record<string, string>;
  body?: string;
}) => Promise<{ status: number; json(): Promise<unknown> }>;

export class ApiHttpError extends Error {
  constructor(public status: number, public body: ApiError) {
    super(`${status}: ${body.message}`);
  }
}

/** resolved to null when a newer request on the same slot superseded this one */
export type Sequenced<T> = T | null;

export class ApiClient {
  private seq: Record<string, number> = {};

  constructor(
    private fetchFn: FetchLike,
    private base: string = "",
  ) {}

  private async request(url: string, init?: Parameters<FetchLike>[1]): Promise<unknown> {
    const resp = await this.fetchFn(this.base + url, init);
    const body = (await resp.json()) as ApiError;
    if (resp.status !== 200) throw new ApiHttpError(resp.status, body);
    return body;
  }

  /** run a request in a named slot; older in-flight responses return null */
  private async sequenced<T>(slot: string, run: () => Promise<T>): Promise<Sequenced<T>> {
    const ticket = (this.seq[slot] = (this.seq[slot] ?? 0) + 1);
    const value = await run();
    return this.seq[slot] === ticket ? value : null;
  }

  homepage(url: string): Promise<HomepageDocument> {
    return this.request(url) as Promise<HomepageDocument>;
  }

  search(collection: string, req: SearchRequest): Promise<Sequenced<SearchResult>> {
    return this.sequenced(`search:${collection}`, () =>
      this.request(`/api/search/${collection}`, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(req),
      }) as Promise<SearchResult>,
    );
  }

  knowl(id: string, depth = 2): Promise<KnowlDocument> {
    return this.request(`/api/knowl/${id}?depth=${depth}`) as Promise<KnowlDocument>;
  }

  zetaZeros(from: number, count: number): Promise<{ zeros: ZeroRow[] }> {
    return this.request(`/api/zeros/zeta?from=${from}&count=${count}`) as Promise<{
      zeros: ZeroRow[];
    }>;
  }
}
