/** Explorer session state and transitions.
 *
 * Every number on screen is a service response; the client only holds the
 * document text, the undo stack, and display data it was handed.  All
 * transitions return a fresh state object.
 */

import type { ServiceClient } from "./api.js";
import type { Arc, ClassifyResult, Win } from "./types.js";
import { sameArc } from "./types.js";

export interface HistoryEntry {
  familyText: string;
  mutated: Arc;
}

export interface HomDisplay {
  x: Arc;
  y: Arc;
  forward: number;
  reverse: number;
}

export interface SessionState {
  familyText: string;
  window: Win;
  history: HistoryEntry[];
  selection: Arc[];
  highlighted: Arc | null;
  arcs: Arc[];
  svg: string;
  classification: ClassifyResult | null;
  homResult: HomDisplay | null;
  notice: string | null;
}

async function fetchView(client: ServiceClient, family: string, w: Win) {
  const [arcsResp, svgResp, clsResp] = [
    await client.windowArcs(family, w),
    await client.render(family, w),
    await client.classify(family),
  ];
  if (!arcsResp.ok) throw new Error(arcsResp.error.kind);
  if (!svgResp.ok) throw new Error(svgResp.error.kind);
  if (!clsResp.ok) throw new Error(clsResp.error.kind);
  return {
    arcs: arcsResp.result.arcs,
    svg: svgResp.result.svg,
    classification: clsResp.result,
  };
}

export async function loadFamily(
  client: ServiceClient,
  text: string,
  w: Win,
): Promise<SessionState> {
  const check = await client.validate(text);
  if (!check.ok) {
    throw new Error(check.error.message ?? check.error.kind);
  }
  if (!check.result.valid) {
    throw new Error("family does not validate");
  }
  const view = await fetchView(client, text, w);
  return {
    familyText: text,
    window: w,
    history: [],
    selection: [],
    highlighted: null,
    homResult: null,
    notice: null,
    ...view,
  };
}

export async function clickArc(
  client: ServiceClient,
  state: SessionState,
  arc: Arc,
): Promise<SessionState> {
  const resp = await client.mutate(state.familyText, arc);
  if (!resp.ok) {
    const message = resp.error.message ?? resp.error.kind;
    return { ...state, notice: message };
  }
  const r = resp.result;
  const view = await fetchView(client, r.family, state.window);
  return {
    ...state,
    familyText: r.family,
    history: [...state.history, { familyText: state.familyText, mutated: arc }],
    highlighted: r.exchanged,
    selection: [],
    homResult: null,
    notice: null,
    ...view,
  };
}

export async function homProbe(
  client: ServiceClient,
  state: SessionState,
  x: Arc,
  y: Arc,
): Promise<SessionState> {
  const resp = await client.hom(x, y);
  if (!resp.ok) {
    return { ...state, notice: resp.error.message ?? resp.error.kind };
  }
  return {
    ...state,
    homResult: { x, y, forward: resp.result.forward, reverse: resp.result.reverse },
    notice: null,
  };
}

export async function setWindow(
  client: ServiceClient,
  state: SessionState,
  w: Win,
): Promise<SessionState> {
  if (w.lo > w.hi) {
    return { ...state, notice: `bad window [${w.lo}, ${w.hi}]` };
  }
  const view = await fetchView(client, state.familyText, w);
  return { ...state, window: w, notice: null, ...view };
}

export async function undo(
  client: ServiceClient,
  state: SessionState,
): Promise<SessionState> {
  const entry = state.history[state.history.length - 1];
  if (!entry) {
    return state;
  }
  const view = await fetchView(client, entry.familyText, state.window);
  return {
    ...state,
    familyText: entry.familyText,
    history: state.history.slice(0, -1),
    highlighted: null,
    selection: [],
    homResult: null,
    notice: null,
    ...view,
  };
}

/** Toggle an arc in the probe selection, keeping at most the last two. */
export function selectArc(state: SessionState, arc: Arc): SessionState {
  const already = state.selection.some((a) => sameArc(a, arc));
  const selection = already
    ? state.selection.filter((a) => !sameArc(a, arc))
    : [...state.selection, arc].slice(-2);
  return { ...state, selection };
}
