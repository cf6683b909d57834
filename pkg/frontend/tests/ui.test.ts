import { beforeEach, describe, expect, it } from "vitest";

import { AuthClient } from "../src/api.js";
import { Studio, createStudio } from "../src/ui.js";

function mouse(type: string, target: Element, x = 0, y = 0) {
  const event = new MouseEvent(type, { bubbles: true, clientX: x, clientY: y });
  target.dispatchEvent(event);
}

function svgOf(studio: Studio): SVGSVGElement {
  return studio.root.querySelector("svg.canvas") as SVGSVGElement;
}

function circleEl(studio: Studio, id: number): Element {
  const el = svgOf(studio).querySelector(`[data-circle-id="${id}"]`);
  if (!el) throw new Error(`no circle element ${id}`);
  return el;
}

describe("studio canvas", () => {
  let studio: Studio;

  beforeEach(() => {
    document.body.innerHTML = '<div id="host"></div>';
    studio = createStudio(document.getElementById("host")!, new AuthClient("http://nowhere"));
  });

  it("click places circles in circle mode", () => {
    mouse("click", svgOf(studio), 40, 50);
    mouse("click", svgOf(studio), 90, 50);
    expect(studio.getCanvas().circles).toHaveLength(2);
    expect(svgOf(studio).querySelectorAll("circle")).toHaveLength(2);
  });

  it("connect mode joins two circles and rejects self-joins with a hint", () => {
    mouse("click", svgOf(studio), 40, 50);
    mouse("click", svgOf(studio), 90, 50);
    studio.setTool("connect");
    mouse("click", circleEl(studio, 0));
    mouse("click", circleEl(studio, 1));
    expect(studio.getCanvas().lines).toHaveLength(1);
    mouse("click", circleEl(studio, 0));
    mouse("click", circleEl(studio, 0));
    expect(studio.getCanvas().lines).toHaveLength(1);
    expect(studio.statusText()).toMatch(/itself/);
  });

  it("dragging a circle moves attached line endpoints", () => {
    mouse("click", svgOf(studio), 40, 50);
    mouse("click", svgOf(studio), 90, 50);
    studio.setTool("connect");
    mouse("click", circleEl(studio, 0));
    mouse("click", circleEl(studio, 1));
    studio.setTool("drag");
    mouse("mousedown", circleEl(studio, 0), 40, 50);
    mouse("mousemove", svgOf(studio), 200, 210);
    mouse("mouseup", svgOf(studio));
    const line = svgOf(studio).querySelector("line")!;
    expect(line.getAttribute("x1")).toBe("200");
    expect(line.getAttribute("y1")).toBe("210");
  });

  it("double-click opens the label editor and enter commits", () => {
    mouse("click", svgOf(studio), 40, 50);
    mouse("dblclick", circleEl(studio, 0));
    const input = studio.root.querySelector("input.label-editor") as HTMLInputElement;
    expect(input.hidden).toBe(false);
    input.value = "7";
    input.dispatchEvent(new KeyboardEvent("keydown", { key: "Enter", bubbles: true }));
    expect(studio.getCanvas().circles[0]!.label).toBe("7");
    const text = svgOf(studio).querySelector('[data-circle-label="0"]');
    expect(text?.textContent).toBe("7");
  });

  it("line labels render at the midpoint", () => {
    mouse("click", svgOf(studio), 0, 0);
    mouse("click", svgOf(studio), 100, 60);
    studio.setTool("connect");
    mouse("click", circleEl(studio, 0));
    mouse("click", circleEl(studio, 1));
    const lineId = studio.getCanvas().lines[0]!.id;
    studio.editLabel("line", lineId, "7");
    const text = svgOf(studio).querySelector(`[data-line-label="${lineId}"]`)!;
    expect(text.getAttribute("x")).toBe("50");
    expect(text.getAttribute("y")).toBe("30");
  });

  it("delete tool removes a circle and its lines", () => {
    mouse("click", svgOf(studio), 40, 50);
    mouse("click", svgOf(studio), 90, 50);
    studio.setTool("connect");
    mouse("click", circleEl(studio, 0));
    mouse("click", circleEl(studio, 1));
    studio.setTool("delete");
    mouse("click", circleEl(studio, 0));
    expect(studio.getCanvas().circles).toHaveLength(1);
    expect(studio.getCanvas().lines).toHaveLength(0);
    expect(svgOf(studio).querySelectorAll("line")).toHaveLength(0);
  });
});
