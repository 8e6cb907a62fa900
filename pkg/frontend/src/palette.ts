/**
 * Fixed 12-swatch palette. Color ids map 1:1 onto swatches; ids beyond 12
 * cycle through the same hues with a pattern overlay so every id stays
 * visually distinct.
 */

export const PALETTE: readonly string[] = [
  "#e6194b",
  "#3cb44b",
  "#4363d8",
  "#f58231",
  "#911eb4",
  "#46f0f0",
  "#f032e6",
  "#bcf60c",
  "#fabed4",
  "#008080",
  "#9a6324",
  "#ffe119",
];

export interface ColorStyle {
  /** Base hue taken from the 12-entry palette. */
  fill: string;
  /** 0 for the first cycle; 1+ selects a pattern overlay. */
  patternTier: number;
}

export function colorStyle(color: number): ColorStyle {
  const index = ((color - 1) % PALETTE.length + PALETTE.length) % PALETTE.length;
  const tier = Math.max(0, Math.floor((color - 1) / PALETTE.length));
  return { fill: PALETTE[index]!, patternTier: tier };
}

export function patternId(tier: number): string {
  return `color-tier-${tier}`;
}

const SVG_NS = "http://www.w3.org/2000/svg";

/**
 * Install overlay patterns (diagonal stripes, dots, crosshatch) into the
 * svg's <defs> for every tier up to maxTier. Tier 0 needs none.
 */
export function ensurePatternDefs(svg: SVGSVGElement, maxTier: number): void {
  if (maxTier < 1) return;
  let defs = svg.querySelector("defs");
  if (!defs) {
    defs = svg.ownerDocument.createElementNS(SVG_NS, "defs");
    svg.insertBefore(defs, svg.firstChild);
  }
  for (let tier = 1; tier <= maxTier; tier += 1) {
    if (defs.querySelector(`#${patternId(tier)}`)) continue;
    const pattern = svg.ownerDocument.createElementNS(SVG_NS, "pattern");
    pattern.setAttribute("id", patternId(tier));
    pattern.setAttribute("width", "8");
    pattern.setAttribute("height", "8");
    pattern.setAttribute("patternUnits", "userSpaceOnUse");
    if (tier % 3 === 1) {
      const line = svg.ownerDocument.createElementNS(SVG_NS, "path");
      line.setAttribute("d", "M0 8 L8 0");
      line.setAttribute("stroke", "rgba(0,0,0,0.55)");
      line.setAttribute("stroke-width", "2");
      pattern.appendChild(line);
    } else if (tier % 3 === 2) {
      const dot = svg.ownerDocument.createElementNS(SVG_NS, "circle");
      dot.setAttribute("cx", "4");
      dot.setAttribute("cy", "4");
      dot.setAttribute("r", "1.6");
      dot.setAttribute("fill", "rgba(0,0,0,0.55)");
      pattern.appendChild(dot);
    } else {
      const a = svg.ownerDocument.createElementNS(SVG_NS, "path");
      a.setAttribute("d", "M0 0 L8 8 M0 8 L8 0");
      a.setAttribute("stroke", "rgba(0,0,0,0.45)");
      a.setAttribute("stroke-width", "1.4");
      pattern.appendChild(a);
    }
    defs.appendChild(pattern);
  }
}
