/** Hit-testing against the rendered semicircle geometry.
 *
 * The service SVG carries its layout on the root element (data-lo,
 * data-unit, data-margin, data-baseline); arcs are upper semicircles over
 * the number line, so a click selects the arc whose circle passes closest
 * to the pointer, within a tolerance, ties going to the smallest span.
 */

import type { Arc } from "./types.js";

export interface Layout {
  lo: number;
  unit: number;
  margin: number;
  baseline: number;
}

export const CLICK_TOLERANCE = 12;

export function vertexX(v: number, layout: Layout): number {
  return layout.margin + (v - layout.lo) * layout.unit;
}

export function arcGeometry(a: Arc, layout: Layout): { cx: number; cy: number; r: number } {
  const x1 = vertexX(a[0], layout);
  const x2 = vertexX(a[1], layout);
  return { cx: (x1 + x2) / 2, cy: layout.baseline, r: (x2 - x1) / 2 };
}

export function pickArc(
  arcs: readonly Arc[],
  layout: Layout,
  x: number,
  y: number,
  tolerance: number = CLICK_TOLERANCE,
): Arc | null {
  if (y > layout.baseline + tolerance) {
    return null;
  }
  let best: Arc | null = null;
  let bestScore = Infinity;
  for (const a of arcs) {
    const { cx, cy, r } = arcGeometry(a, layout);
    const score = Math.abs(Math.hypot(x - cx, y - cy) - r);
    if (score > tolerance) {
      continue;
    }
    if (
      best === null ||
      score < bestScore - 0.5 ||
      (Math.abs(score - bestScore) <= 0.5 && a[1] - a[0] < best[1] - best[0])
    ) {
      best = a;
      bestScore = Math.min(score, bestScore);
    }
  }
  return best;
}
