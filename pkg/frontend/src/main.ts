/** DOM wiring for the mutation explorer. */

import { HttpClient } from "./api.js";
import { CLICK_TOLERANCE, Layout, pickArc } from "./geometry.js";
import {
  SessionState,
  clickArc,
  homProbe,
  loadFamily,
  selectArc,
  setWindow,
  undo,
} from "./session.js";
import { Arc, arcLabel, sameArc } from "./types.js";

const FOUNTAIN = `infgon/1
orbit 0 2 dl 0 dr 1
orbit -2 0 dl -1 dr 0
`;

const LEAPFROG = `infgon/1
orbit -1 1 dl -1 dr 1
orbit -2 1 dl -1 dr 1
`;

const SPLIT = `infgon/1
orbit -2 0 dl -1 dr 0
orbit 1 3 dl 0 dr 1
`;

const $ = <T extends HTMLElement>(id: string): T => {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing #${id}`);
  return el as T;
};

let client = new HttpClient("");
let state: SessionState | null = null;
let mode: "mutate" | "probe" = "mutate";

function describeFF(s: SessionState): string {
  const cls = s.classification;
  if (!cls) return "";
  const bits: string[] = [];
  bits.push(cls.locally_finite ? "locally finite" : "not locally finite");
  if (cls.fountains.length) bits.push(`fountain at ${cls.fountains.join(", ")}`);
  else {
    if (cls.left_fountains.length) bits.push(`left-fountain at ${cls.left_fountains}`);
    if (cls.right_fountains.length) bits.push(`right-fountain at ${cls.right_fountains}`);
  }
  if (cls.ff) {
    bits.push(cls.ff.functorially_finite ? "functorially finite" : "NOT functorially finite");
  }
  return bits.join(" · ");
}

function redraw(): void {
  if (!state) return;
  const host = $("diagram");
  host.innerHTML = state.svg;
  const svg = host.querySelector("svg");
  if (svg) {
    for (const path of svg.querySelectorAll<SVGPathElement>("path.arc")) {
      const key = path.getAttribute("data-arc") ?? "";
      const arc = key.split(",").map(Number) as unknown as Arc;
      if (state.highlighted && sameArc(arc, state.highlighted)) {
        path.setAttribute("stroke", "#c0392b");
        path.setAttribute("stroke-width", "3");
      }
      if (state.selection.some((a) => sameArc(a, arc))) {
        path.setAttribute("stroke", "#8e44ad");
        path.setAttribute("stroke-width", "3");
      }
    }
  }
  $("classification").textContent = describeFF(state);
  $("notice").textContent = state.notice ?? "";
  const hom = state.homResult;
  $("hom-result").textContent = hom
    ? `hom ${arcLabel(hom.x)} -> ${arcLabel(hom.y)} = ${hom.forward}; reverse = ${hom.reverse}`
    : "";
  $("history-depth").textContent = String(state.history.length);
  ($("family-text") as HTMLTextAreaElement).value = state.familyText;
}

function layoutOf(svg: SVGSVGElement): Layout {
  return {
    lo: Number(svg.dataset.lo),
    unit: Number(svg.dataset.unit),
    margin: Number(svg.dataset.margin),
    baseline: Number(svg.dataset.baseline),
  };
}

async function handleClick(ev: MouseEvent): Promise<void> {
  if (!state) return;
  const svg = $("diagram").querySelector("svg");
  if (!svg) return;
  const rect = svg.getBoundingClientRect();
  const x = ev.clientX - rect.left;
  const y = ev.clientY - rect.top;
  const arc = pickArc(state.arcs, layoutOf(svg as SVGSVGElement), x, y, CLICK_TOLERANCE);
  if (!arc) return;
  if (mode === "mutate") {
    state = await clickArc(client, state, arc);
  } else {
    state = selectArc(state, arc);
    if (state.selection.length === 2) {
      state = await homProbe(client, state, state.selection[0], state.selection[1]);
    }
  }
  redraw();
}

async function load(text: string): Promise<void> {
  const lo = Number(($("win-lo") as HTMLInputElement).value);
  const hi = Number(($("win-hi") as HTMLInputElement).value);
  try {
    state = await loadFamily(client, text, { lo, hi });
  } catch (err) {
    $("notice").textContent = String(err);
    return;
  }
  redraw();
}

function init(): void {
  const urlInput = $("service-url") as HTMLInputElement;
  client = new HttpClient(urlInput.value);
  urlInput.addEventListener("change", () => {
    client = new HttpClient(urlInput.value);
  });
  $("load-fountain").addEventListener("click", () => void load(FOUNTAIN));
  $("load-leapfrog").addEventListener("click", () => void load(LEAPFROG));
  $("load-split").addEventListener("click", () => void load(SPLIT));
  $("load-custom").addEventListener("click", () => {
    void load(($("family-text") as HTMLTextAreaElement).value);
  });
  $("undo").addEventListener("click", async () => {
    if (state) {
      state = await undo(client, state);
      redraw();
    }
  });
  $("set-window").addEventListener("click", async () => {
    if (!state) return;
    const lo = Number(($("win-lo") as HTMLInputElement).value);
    const hi = Number(($("win-hi") as HTMLInputElement).value);
    state = await setWindow(client, state, { lo, hi });
    redraw();
  });
  for (const value of ["mutate", "probe"] as const) {
    $(`mode-${value}`).addEventListener("change", () => {
      mode = value;
      if (state) {
        state = { ...state, selection: [], homResult: null };
        redraw();
      }
    });
  }
  $("diagram").addEventListener("click", (ev) => void handleClick(ev as MouseEvent));
  void load(LEAPFROG);
}

init();
