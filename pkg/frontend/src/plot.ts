/**
 * Critical-line plot geometry: a polyline through the (t, Z(t)) samples
 * the API serves, plus markers at the tabulated zeros.
 *
 * Strictly presentation: the only arithmetic here is the affine map from
 * data coordinates to pixels. No function values are ever computed
 * client-side.
 */

import type { PlotData } from "./types.js";

export interface PlotGeometry {
  width: number;
  height: number;
  /** SVG path ("M x y L x y ...") through the samples */
  path: string;
  /** pixel x of each tabulated zero, for markers on the axis */
  markers: { x: number; t: number }[];
  /** pixel y of the t-axis (Z = 0) */
  axisY: number;
}

const round = (v: number) => Math.round(v * 100) / 100;

export function plotGeometry(plot: PlotData, width = 640, height = 200): PlotGeometry {
  const ts = plot.t;
  const zs = plot.z;
  if (ts.length === 0) return { width, height, path: "", markers: [], axisY: height / 2 };
  const tMin = ts[0];
  const tMax = ts[ts.length - 1];
  const zAbs = Math.max(1e-9, ...zs.map(Math.abs));
  const x = (t: number) =>
    tMax === tMin ? width / 2 : ((t - tMin) / (tMax - tMin)) * width;
  const y = (z: number) => height / 2 - (z / zAbs) * (height / 2 - 4);
  const path = ts
    .map((t, i) => `${i === 0 ? "M" : "L"} ${round(x(t))} ${round(y(zs[i]))}`)
    .join(" ");
  return {
    width,
    height,
    path,
    markers: plot.zero_markers
      .filter((t) => t >= tMin && t <= tMax)
      .map((t) => ({ x: round(x(t)), t })),
    axisY: round(y(0)),
  };
}

/** sign changes in the sampled polyline (ignoring exact zeros) */
export function sampleSignChanges(plot: PlotData): number {
  const signs = plot.z.filter((z) => z !== 0);
  let changes = 0;
  for (let i = 1; i < signs.length; i++) {
    if (signs[i - 1] * signs[i] < 0) changes++;
  }
  return changes;
}
