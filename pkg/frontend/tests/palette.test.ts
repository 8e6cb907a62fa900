import { PALETTE, colorStyle, ensurePatternDefs, patternId } from "../src/palette.js";

describe("colorStyle", () => {
  test("color ids 1..12 map straight onto the palette with no pattern", () => {
    for (let c = 1; c <= 12; c += 1) {
      const style = colorStyle(c);
      expect(style.fill).toBe(PALETTE[c - 1]);
      expect(style.patternTier).toBe(0);
    }
  });

  test("ids beyond 12 cycle hues and gain a pattern tier", () => {
    expect(colorStyle(13)).toEqual({ fill: PALETTE[0], patternTier: 1 });
    expect(colorStyle(24)).toEqual({ fill: PALETTE[11], patternTier: 1 });
    expect(colorStyle(25)).toEqual({ fill: PALETTE[0], patternTier: 2 });
  });

  test("distinct ids in 1..24 never collide visually", () => {
    const seen = new Set<string>();
    for (let c = 1; c <= 24; c += 1) {
      const style = colorStyle(c);
      seen.add(`${style.fill}/${style.patternTier}`);
    }
    expect(seen.size).toBe(24);
  });
});

describe("ensurePatternDefs", () => {
  const svg = () =>
    document.createElementNS("http://www.w3.org/2000/svg", "svg") as SVGSVGElement;

  test("tier 0 installs nothing", () => {
    const node = svg();
    ensurePatternDefs(node, 0);
    expect(node.querySelector("defs")).toBeNull();
  });

  test("installs one pattern per tier and is idempotent", () => {
    const node = svg();
    ensurePatternDefs(node, 2);
    ensurePatternDefs(node, 2);
    expect(node.querySelectorAll("pattern")).toHaveLength(2);
    expect(node.querySelector(`#${patternId(1)}`)).not.toBeNull();
    expect(node.querySelector(`#${patternId(2)}`)).not.toBeNull();
  });
});
