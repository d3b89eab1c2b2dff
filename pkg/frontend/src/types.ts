/**
 * Wire types mirroring the JSON API one-to-one.
 *
 * The UI never derives mathematical values: every number displayed on a
 * page comes out of one of these payloads verbatim.
 */

export interface PropertyRow {
  name: string;
  value: string | number | boolean;
  source: "stored" | "computed";
}

export interface RelatedObject {
  relation: string;
  target_class: string;
  target_label: string;
  url: string;
  resolved: boolean;
  note: string | null;
}

export interface DownloadLink {
  name: string;
  url: string;
}

export interface KnowlRef {
  id: string;
  resolved: boolean;
}

export interface ZeroRow {
  t: number;
  decimal: string;
  precision_exponent: number;
}

export interface PlotData {
  t: number[];
  z: number[];
  zero_markers: number[];
}

export interface HomepageDocument {
  label: string;
  class: string;
  title: string;
  url: string;
  properties: PropertyRow[];
  related_objects: RelatedObject[];
  downloads: DownloadLink[];
  knowls: KnowlRef[];
  historical_note?: string;
  coefficients?: string[];
  euler_factors?: { p: number; factor: string }[];
  zeros?: ZeroRow[];
  plot?: PlotData | null;
  ap?: { values: Record<string, number>; source: string };
  values?: { table: { n: number; value: string }[]; source: string };
}

export interface SearchResultRow {
  label: string;
  url: string;
  [summary: string]: string | number | boolean | number[] | undefined;
}

export interface SearchResult {
  collection: string;
  total: number;
  page: number;
  page_size: number;
  results: SearchResultRow[];
}

/** filters as the API accepts them: scalar = equality, {min,max} = range,
 * {contains} = list membership */
export type FilterValue =
  | string
  | number
  | boolean
  | { min: number | string; max: number | string }
  | { contains: string | number };

export interface SearchRequest {
  filters: Record<string, FilterValue>;
  sort?: string;
  page?: number;
  page_size?: number;
}

/** knowl render tree, exactly as /api/knowl/{id} returns it */
export type KnowlNode =
  | { type: "text"; text: string }
  | { type: "link"; id: string; display: string; title: string }
  | {
      type: "stub";
      id: string;
      display: string;
      title: string | null;
      broken: boolean;
      nodes: KnowlNode[];
    };

export interface KnowlDocument {
  type: "knowl";
  id: string;
  title: string;
  version: number;
  nodes: KnowlNode[];
}

export interface ApiError {
  code: string;
  message: string;
  valid_fields?: string[];
}
