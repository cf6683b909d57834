/**
 * Canvas model: circles joined by lines, both labellable with numbers.
 *
 * All edit actions are pure functions on CanvasState. Geometry (x, y) is
 * display-only and never serialized; topology and labels are the password.
 */

export type StrokeKind = "solid" | "dotted";

export interface ElementStyle {
  stroke: StrokeKind;
  colorIndex: number;
}

export const DEFAULT_STYLE: ElementStyle = { stroke: "solid", colorIndex: 0 };

export interface Circle {
  id: number; // creation order, defines serialized vertex numbering
  x: number;
  y: number;
  label: string | null;
  style: ElementStyle;
}

export interface Line {
  id: number;
  from: number; // circle ids
  to: number;
  label: string | null;
  style: ElementStyle;
}

export interface CanvasState {
  circles: Circle[];
  lines: Line[];
  nextId: number;
}

export class EditError extends Error {}

export function emptyCanvas(): CanvasState {
  return { circles: [], lines: [], nextId: 0 };
}

export function placeCircle(
  state: CanvasState,
  x: number,
  y: number,
  style: ElementStyle = DEFAULT_STYLE,
): { state: CanvasState; id: number } {
  const id = state.nextId;
  const circle: Circle = { id, x, y, label: null, style };
  return {
    state: { ...state, circles: [...state.circles, circle], nextId: id + 1 },
    id,
  };
}

export function dragCircle(state: CanvasState, id: number, x: number, y: number): CanvasState {
  const circles = state.circles.map((c) => (c.id === id ? { ...c, x, y } : c));
  if (!circles.some((c) => c.id === id)) {
    throw new EditError(`no circle ${id}`);
  }
  // lines reference circle ids, so they follow the drag by construction
  return { ...state, circles };
}

export function connectCircles(
  state: CanvasState,
  from: number,
  to: number,
  style: ElementStyle = DEFAULT_STYLE,
): { state: CanvasState; id: number } {
  if (from === to) {
    throw new EditError("cannot join a circle to itself");
  }
  const have = new Set(state.circles.map((c) => c.id));
  if (!have.has(from) || !have.has(to)) {
    throw new EditError("line endpoints must be existing circles");
  }
  const exists = state.lines.some(
    (l) => (l.from === from && l.to === to) || (l.from === to && l.to === from),
  );
  if (exists) {
    throw new EditError("these circles are already joined");
  }
  const id = state.nextId;
  const line: Line = { id, from, to, label: null, style };
  return { state: { ...state, lines: [...state.lines, line], nextId: id + 1 }, id };
}

function validLabel(label: string): boolean {
  return /^\d+$/.test(label);
}

export function labelCircle(state: CanvasState, id: number, label: string | null): CanvasState {
  if (label !== null && !validLabel(label)) {
    throw new EditError("labels are non-negative integers");
  }
  if (!state.circles.some((c) => c.id === id)) {
    throw new EditError(`no circle ${id}`);
  }
  return {
    ...state,
    circles: state.circles.map((c) => (c.id === id ? { ...c, label } : c)),
  };
}

export function labelLine(state: CanvasState, id: number, label: string | null): CanvasState {
  if (label !== null && !validLabel(label)) {
    throw new EditError("labels are non-negative integers");
  }
  if (!state.lines.some((l) => l.id === id)) {
    throw new EditError(`no line ${id}`);
  }
  return {
    ...state,
    lines: state.lines.map((l) => (l.id === id ? { ...l, label } : l)),
  };
}

export function deleteCircle(state: CanvasState, id: number): CanvasState {
  if (!state.circles.some((c) => c.id === id)) {
    throw new EditError(`no circle ${id}`);
  }
  return {
    ...state,
    circles: state.circles.filter((c) => c.id !== id),
    lines: state.lines.filter((l) => l.from !== id && l.to !== id),
  };
}

export function deleteLine(state: CanvasState, id: number): CanvasState {
  if (!state.lines.some((l) => l.id === id)) {
    throw new EditError(`no line ${id}`);
  }
  return { ...state, lines: state.lines.filter((l) => l.id !== id) };
}

export function circleAt(state: CanvasState, id: number): Circle {
  const c = state.circles.find((x) => x.id === id);
  if (!c) throw new EditError(`no circle ${id}`);
  return c;
}

export function lineMidpoint(state: CanvasState, line: Line): { x: number; y: number } {
  const a = circleAt(state, line.from);
  const b = circleAt(state, line.to);
  return { x: (a.x + b.x) / 2, y: (a.y + b.y) / 2 };
}
