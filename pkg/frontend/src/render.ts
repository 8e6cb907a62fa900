import { blobEdges, forcePositions, intervalLanes, laneCount } from "./layout.js";
import { colorStyle, ensurePatternDefs, patternId } from "./palette.js";
import { blobOfVertex, type ViewModel } from "./state.js";
import type { StatePayload } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export interface BoardCallbacks {
  onBlobClick(blobId: number): void;
  onColorClick(color: number): void;
}

function el<K extends string>(doc: Document, tag: K): SVGElement {
  return doc.createElementNS(SVG_NS, tag) as SVGElement;
}

function maxTier(state: StatePayload): number {
  return colorStyle(state.k).patternTier;
}

function blobGroup(
  doc: Document,
  blob: { id: number; color: number; vertices: number[] },
  model: ViewModel,
  cb: BoardCallbacks,
): SVGElement {
  const group = el(doc, "g");
  group.setAttribute("data-blob", String(blob.id));
  group.setAttribute("data-color", String(blob.color));
  group.setAttribute("data-vertices", blob.vertices.join(","));
  const classes = ["blob"];
  if (model.selected === blob.id) classes.push("selected");
  if (model.hint && blobOfVertex(model.state, model.hint.move.vertex) === blob.id) {
    classes.push("hint");
  }
  const pivot = model.state?.variant === "fixed" ? model.state.pivot : undefined;
  if (pivot !== undefined && blob.vertices.includes(pivot)) classes.push("pivot");
  group.setAttribute("class", classes.join(" "));
  group.addEventListener("click", () => cb.onBlobClick(blob.id));
  return group;
}

function paintShape(shape: SVGElement, color: number): void {
  const style = colorStyle(color);
  shape.setAttribute("fill", style.fill);
  if (style.patternTier > 0) {
    shape.setAttribute("data-pattern", patternId(style.patternTier));
  }
}

/** Overlay rect/circle re-filled with the tier pattern, drawn on top. */
function patternOverlay(doc: Document, base: SVGElement, color: number): SVGElement | null {
  const style = colorStyle(color);
  if (style.patternTier === 0) return null;
  const overlay = base.cloneNode(false) as SVGElement;
  overlay.setAttribute("fill", `url(#${patternId(style.patternTier)})`);
  overlay.setAttribute("class", "pattern-overlay");
  return overlay;
}

function renderIntervalBoard(
  svg: SVGSVGElement,
  model: ViewModel,
  state: StatePayload,
  intervals: readonly [number, number][],
  cb: BoardCallbacks,
): void {
  const doc = svg.ownerDocument;
  const segments = intervalLanes(intervals);
  const lanes = laneCount(segments);
  const lo = Math.min(...intervals.map(([a]) => a));
  const hi = Math.max(...intervals.map(([, b]) => b));
  const laneHeight = 34;
  const pad = 1;
  svg.setAttribute(
    "viewBox",
    `${lo - pad} 0 ${hi - lo + 2 * pad + 0.8} ${lanes * laneHeight}`,
  );
  svg.setAttribute("preserveAspectRatio", "none");
  ensurePatternDefs(svg, maxTier(state));

  for (const blob of state.blobs) {
    const group = blobGroup(doc, blob, model, cb);
    for (const vertex of blob.vertices) {
      const seg = segments[vertex]!;
      const rect = el(doc, "rect");
      rect.setAttribute("data-vertex", String(vertex));
      rect.setAttribute("x", String(seg.lo));
      rect.setAttribute("y", String(seg.lane * laneHeight + 4));
      rect.setAttribute("width", String(seg.hi - seg.lo + 0.8));
      rect.setAttribute("height", String(laneHeight - 8));
      rect.setAttribute("rx", "0.2");
      paintShape(rect, blob.color);
      group.appendChild(rect);
      const overlay = patternOverlay(doc, rect, blob.color);
      if (overlay) group.appendChild(overlay);
    }
    svg.appendChild(group);
  }
}

function renderForceBoard(
  svg: SVGSVGElement,
  model: ViewModel,
  state: StatePayload,
  cb: BoardCallbacks,
): void {
  const doc = svg.ownerDocument;
  const width = 640;
  const height = 420;
  const margin = 50;
  svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
  svg.removeAttribute("preserveAspectRatio");
  ensurePatternDefs(svg, maxTier(state));

  const edges = blobEdges(state.blobs);
  const points = forcePositions(state.blobs.length, edges, state.n);
  const px = (i: number) => margin + points[i]!.x * (width - 2 * margin);
  const py = (i: number) => margin + points[i]!.y * (height - 2 * margin);

  const edgeLayer = el(doc, "g");
  edgeLayer.setAttribute("class", "edges");
  for (const [u, v] of edges) {
    const line = el(doc, "line");
    line.setAttribute("x1", String(px(u)));
    line.setAttribute("y1", String(py(u)));
    line.setAttribute("x2", String(px(v)));
    line.setAttribute("y2", String(py(v)));
    edgeLayer.appendChild(line);
  }
  svg.appendChild(edgeLayer);

  for (const blob of state.blobs) {
    const group = blobGroup(doc, blob, model, cb);
    const circle = el(doc, "circle");
    circle.setAttribute("cx", String(px(blob.id)));
    circle.setAttribute("cy", String(py(blob.id)));
    const radius = 14 + 5 * Math.sqrt(blob.vertices.length - 1);
    circle.setAttribute("r", String(radius));
    paintShape(circle, blob.color);
    group.appendChild(circle);
    const overlay = patternOverlay(doc, circle, blob.color);
    if (overlay) group.appendChild(overlay);
    const label = el(doc, "text");
    label.setAttribute("x", String(px(blob.id)));
    label.setAttribute("y", String(py(blob.id)));
    label.setAttribute("class", "blob-size");
    label.textContent = String(blob.vertices.length);
    group.appendChild(label);
    svg.appendChild(group);
  }
}

export function renderBoard(svg: SVGSVGElement, model: ViewModel, cb: BoardCallbacks): void {
  svg.replaceChildren();
  const state = model.state;
  if (!state) return;
  if (state.intervals && state.intervals.length > 0) {
    renderIntervalBoard(svg, model, state, state.intervals, cb);
  } else {
    renderForceBoard(svg, model, state, cb);
  }
}

export function renderPalette(
  container: HTMLElement,
  model: ViewModel,
  cb: BoardCallbacks,
): void {
  container.replaceChildren();
  const state = model.state;
  if (!state) return;
  const doc = container.ownerDocument;
  for (let color = 1; color <= state.k; color += 1) {
    const button = doc.createElement("button");
    button.type = "button";
    button.className = "swatch";
    button.dataset.color = String(color);
    const style = colorStyle(color);
    button.style.background = style.fill;
    if (style.patternTier > 0) button.classList.add(`tier-${style.patternTier % 3}`);
    if (model.hint && model.hint.move.color === color) button.classList.add("hint");
    button.title = `color ${color}`;
    button.textContent = String(color);
    button.disabled = model.busy || state.won;
    button.addEventListener("click", () => cb.onColorClick(color));
    container.appendChild(button);
  }
}

export function renderStatus(container: HTMLElement, model: ViewModel): void {
  const doc = container.ownerDocument;
  container.replaceChildren();
  const state = model.state;
  if (!state) {
    const idle = doc.createElement("p");
    idle.textContent = "No game loaded.";
    container.appendChild(idle);
    return;
  }
  const lines: [string, string][] = [
    ["moves", String(state.move_count)],
    ["blobs", String(state.blobs.length)],
    ["colors left", String(state.distinct_colors)],
    ["lower bound", String(state.lower_bound)],
  ];
  if (model.optimalFromStart !== null) {
    lines.push(["optimum", String(model.optimalFromStart)]);
  }
  if (state.variant === "fixed" && state.pivot !== undefined) {
    lines.push(["pivot", String(state.pivot)]);
  }
  const dl = doc.createElement("dl");
  dl.className = "stats";
  for (const [term, value] of lines) {
    const dt = doc.createElement("dt");
    dt.textContent = term;
    const dd = doc.createElement("dd");
    dd.dataset.stat = term.replace(/ /g, "-");
    dd.textContent = value;
    dl.appendChild(dt);
    dl.appendChild(dd);
  }
  container.appendChild(dl);

  if (model.hint) {
    const hint = doc.createElement("p");
    hint.className = "hint-line";
    const tail = model.hint.optimal
      ? `${model.hint.remaining_opt} moves remain on an optimal line`
      : `at most ${model.hint.remaining_opt} moves remain`;
    hint.textContent = `hint: recolor the highlighted blob to color ${model.hint.move.color}; ${tail}`;
    container.appendChild(hint);
  }

  if (state.won) {
    const banner = doc.createElement("p");
    banner.className = "win-banner";
    const target = model.optimalFromStart;
    banner.textContent =
      target === null
        ? `solved in ${state.move_count} moves`
        : state.move_count === target
          ? `solved in ${state.move_count} moves - optimal`
          : `solved in ${state.move_count} moves (optimum ${target})`;
    container.appendChild(banner);
  }
}

export function renderError(container: HTMLElement, model: ViewModel): void {
  container.replaceChildren();
  if (!model.error) {
    container.hidden = true;
    return;
  }
  container.hidden = false;
  const doc = container.ownerDocument;
  const p = doc.createElement("p");
  p.className = "problem";
  p.textContent = model.error;
  container.appendChild(p);
}
