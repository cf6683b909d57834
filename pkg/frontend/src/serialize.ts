/**
 * Submission building: canvas state -> server graph text.
 *
 * Vertex numbering follows circle creation order, so two drawings of the
 * same labelled topology serialize byte-identically no matter where the
 * circles sit on screen. Styles travel as an optional attribute next to
 * the graph text; the server ignores them.
 */

import type { CanvasState, ElementStyle } from "./model.js";

export class SubmissionError extends Error {}

export interface Submission {
  graph: string;
  rule?: string;
  styles?: {
    circles: ElementStyle[];
    lines: ElementStyle[];
  };
}

export function composeSubmission(
  state: CanvasState,
  opts: { rule?: string; requireTotalLabels?: boolean; includeStyles?: boolean } = {},
): Submission {
  const requireTotal = opts.requireTotalLabels ?? true;
  if (state.circles.length === 0) {
    throw new SubmissionError("place at least one labelled circle before submitting");
  }
  const ordered = [...state.circles].sort((a, b) => a.id - b.id);
  const index = new Map<number, number>();
  ordered.forEach((c, i) => index.set(c.id, i));

  if (requireTotal) {
    const missing = ordered.filter((c) => c.label === null);
    if (missing.length > 0) {
      throw new SubmissionError(
        `every circle needs a number before submitting (${missing.length} unlabelled)`,
      );
    }
  }

  const edges = [...state.lines]
    .map((l) => {
      const u = index.get(l.from);
      const v = index.get(l.to);
      if (u === undefined || v === undefined) {
        throw new SubmissionError("a line references a deleted circle");
      }
      const [a, b] = u < v ? [u, v] : [v, u];
      return { a, b, label: l.label, lineId: l.id };
    })
    .sort((x, y) => x.a - y.a || x.b - y.b);

  const out: string[] = [`${ordered.length} ${edges.length}`];
  for (const e of edges) {
    out.push(e.label === null ? `${e.a} ${e.b}` : `${e.a} ${e.b} ${e.label}`);
  }
  ordered.forEach((c, i) => {
    if (c.label !== null) {
      out.push(`${i} ${c.label}`);
    }
  });

  const submission: Submission = { graph: out.join("\n") + "\n" };
  if (opts.rule) {
    submission.rule = opts.rule;
  }
  if (opts.includeStyles) {
    submission.styles = {
      circles: ordered.map((c) => c.style),
      lines: edges.map((e) => {
        const line = state.lines.find((l) => l.id === e.lineId)!;
        return line.style;
      }),
    };
  }
  return submission;
}
