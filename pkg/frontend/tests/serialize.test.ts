import { describe, expect, it } from "vitest";

import {
  connectCircles,
  emptyCanvas,
  dragCircle,
  labelCircle,
  labelLine,
  placeCircle,
} from "../src/model.js";
import { SubmissionError, composeSubmission } from "../src/serialize.js";

function labelledTriangle(positions: [number, number][]) {
  let state = emptyCanvas();
  const ids: number[] = [];
  for (const [x, y] of positions) {
    const placed = placeCircle(state, x, y);
    state = placed.state;
    ids.push(placed.id);
  }
  state = connectCircles(state, ids[0]!, ids[1]!).state;
  state = connectCircles(state, ids[1]!, ids[2]!).state;
  state = connectCircles(state, ids[2]!, ids[0]!).state;
  state = labelCircle(state, ids[0]!, "0");
  state = labelCircle(state, ids[1]!, "1");
  state = labelCircle(state, ids[2]!, "3");
  return state;
}

describe("composeSubmission", () => {
  it("serializes creation-order vertices and sorted edges", () => {
    const state = labelledTriangle([
      [0, 0],
      [10, 0],
      [5, 9],
    ]);
    const submission = composeSubmission(state);
    expect(submission.graph).toBe("3 3\n0 1\n0 2\n1 2\n0 0\n1 1\n2 3\n");
  });

  it("is geometry free: drags never change the bytes", () => {
    const a = labelledTriangle([
      [0, 0],
      [10, 0],
      [5, 9],
    ]);
    let b = labelledTriangle([
      [500, 320],
      [12, 44],
      [77, 1],
    ]);
    b = dragCircle(b, 0, 9999, 1);
    expect(composeSubmission(a).graph).toBe(composeSubmission(b).graph);
  });

  it("includes edge labels when present", () => {
    let state = labelledTriangle([
      [0, 0],
      [10, 0],
      [5, 9],
    ]);
    const line = state.lines[0]!;
    state = labelLine(state, line.id, "1");
    expect(composeSubmission(state).graph).toContain("0 1 1\n");
  });

  it("rejects an empty canvas with a readable message", () => {
    expect(() => composeSubmission(emptyCanvas())).toThrow(SubmissionError);
    expect(() => composeSubmission(emptyCanvas())).toThrow(/at least one/);
  });

  it("rejects unlabelled circles under a total-labelling rule", () => {
    let state = emptyCanvas();
    const placed = placeCircle(state, 1, 1);
    state = placed.state;
    expect(() => composeSubmission(state)).toThrow(/unlabelled/);
    expect(composeSubmission(state, { requireTotalLabels: false }).graph).toBe("1 0\n");
  });

  it("numbers by creation order even after deletions", () => {
    let state = emptyCanvas();
    const a = placeCircle(state, 0, 0);
    state = a.state;
    const b = placeCircle(state, 1, 1);
    state = b.state;
    const c = placeCircle(state, 2, 2);
    state = c.state;
    state = connectCircles(state, a.id, c.id).state;
    state = labelCircle(state, a.id, "5");
    state = labelCircle(state, c.id, "6");
    // drop the middle circle: remaining two renumber to 0 and 1
    state = { ...state, circles: state.circles.filter((x) => x.id !== b.id) };
    expect(composeSubmission(state).graph).toBe("2 1\n0 1\n0 5\n1 6\n");
  });

  it("carries styles as an optional attribute, not in the graph text", () => {
    const state = labelledTriangle([
      [0, 0],
      [10, 0],
      [5, 9],
    ]);
    const plain = composeSubmission(state);
    const styled = composeSubmission(state, { includeStyles: true });
    expect(plain.styles).toBeUndefined();
    expect(styled.graph).toBe(plain.graph);
    expect(styled.styles!.circles).toHaveLength(3);
    expect(styled.styles!.lines).toHaveLength(3);
  });
});
