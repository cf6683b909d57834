/**
 * SVG canvas editor plus the authentication screens.
 *
 * The working region renders the canvas model; a toolbar switches between
 * placing circles, joining them, dragging and deleting. Double-clicking a
 * circle or a line center opens the label editor. Lines follow dragged
 * circles because they are drawn from the model on every change.
 */

import { AuthClient, Template } from "./api.js";
import { AuthFlow, FlowState } from "./flow.js";
import {
  CanvasState,
  EditError,
  circleAt,
  connectCircles,
  deleteCircle,
  deleteLine,
  dragCircle,
  emptyCanvas,
  labelCircle,
  labelLine,
  lineMidpoint,
  placeCircle,
} from "./model.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export type Tool = "circle" | "connect" | "drag" | "delete";

export interface Studio {
  root: HTMLElement;
  flow: AuthFlow;
  getCanvas(): CanvasState;
  setTool(tool: Tool): void;
  canvasClick(x: number, y: number): void;
  circleClick(id: number): void;
  lineClick(id: number): void;
  dragTo(id: number, x: number, y: number): void;
  editLabel(kind: "circle" | "line", id: number, label: string): void;
  statusText(): string;
  submit(): Promise<FlowState>;
  begin(userId: string): Promise<FlowState>;
  retry(): Promise<FlowState>;
}

export function createStudio(root: HTMLElement, client: AuthClient): Studio {
  const doc = root.ownerDocument;
  let state = emptyCanvas();
  let tool: Tool = "circle";
  let connectFrom: number | null = null;
  const flow = new AuthFlow(client);

  root.classList.add("gpw-studio");
  root.innerHTML = "";

  const toolbar = doc.createElement("div");
  toolbar.className = "toolbar";
  for (const t of ["circle", "connect", "drag", "delete"] as Tool[]) {
    const button = doc.createElement("button");
    button.textContent = t;
    button.dataset.tool = t;
    button.addEventListener("click", () => setTool(t));
    toolbar.appendChild(button);
  }
  const submitButton = doc.createElement("button");
  submitButton.className = "submit";
  submitButton.textContent = "Submit key";
  submitButton.addEventListener("click", () => void submitCurrent());
  toolbar.appendChild(submitButton);

  function submitCurrent(): Promise<FlowState> {
    return flow.submit(state);
  }
  root.appendChild(toolbar);

  const status = doc.createElement("div");
  status.className = "status";
  root.appendChild(status);

  const templateBox = doc.createElement("div");
  templateBox.className = "template";
  root.appendChild(templateBox);

  const svg = doc.createElementNS(SVG_NS, "svg") as SVGSVGElement;
  svg.setAttribute("class", "canvas");
  svg.setAttribute("width", "640");
  svg.setAttribute("height", "400");
  root.appendChild(svg);

  const labelInput = doc.createElement("input");
  labelInput.className = "label-editor";
  labelInput.hidden = true;
  root.appendChild(labelInput);

  let dragging: number | null = null;

  function setTool(next: Tool): void {
    tool = next;
    connectFrom = null;
    for (const b of toolbar.querySelectorAll("button[data-tool]")) {
      b.classList.toggle("active", (b as HTMLButtonElement).dataset.tool === next);
    }
  }

  function hint(message: string): void {
    status.textContent = message;
  }

  function apply(action: () => void): void {
    try {
      action();
      render();
    } catch (err) {
      if (err instanceof EditError) {
        hint(err.message);
        return;
      }
      throw err;
    }
  }

  function canvasClick(x: number, y: number): void {
    if (tool === "circle") {
      apply(() => {
        state = placeCircle(state, x, y).state;
      });
    }
  }

  function circleClick(id: number): void {
    if (tool === "connect") {
      if (connectFrom === null) {
        connectFrom = id;
        hint("now pick the second circle");
        return;
      }
      const from = connectFrom;
      connectFrom = null;
      apply(() => {
        state = connectCircles(state, from, id).state;
      });
    } else if (tool === "delete") {
      apply(() => {
        state = deleteCircle(state, id);
      });
    }
  }

  function lineClick(id: number): void {
    if (tool === "delete") {
      apply(() => {
        state = deleteLine(state, id);
      });
    }
  }

  function dragTo(id: number, x: number, y: number): void {
    apply(() => {
      state = dragCircle(state, id, x, y);
    });
  }

  function editLabel(kind: "circle" | "line", id: number, label: string): void {
    apply(() => {
      state = kind === "circle" ? labelCircle(state, id, label) : labelLine(state, id, label);
    });
  }

  function openLabelEditor(kind: "circle" | "line", id: number): void {
    labelInput.hidden = false;
    labelInput.value = "";
    labelInput.dataset.kind = kind;
    labelInput.dataset.id = String(id);
    labelInput.focus();
  }

  labelInput.addEventListener("keydown", (event) => {
    if ((event as KeyboardEvent).key === "Enter") {
      const kind = labelInput.dataset.kind as "circle" | "line";
      const id = Number(labelInput.dataset.id);
      editLabel(kind, id, labelInput.value.trim());
      labelInput.hidden = true;
    }
  });

  svg.addEventListener("mousedown", (event) => {
    const target = event.target as Element;
    const circleId = target.getAttribute("data-circle-id");
    if (circleId !== null && tool === "drag") {
      dragging = Number(circleId);
    }
  });
  svg.addEventListener("mousemove", (event) => {
    if (dragging !== null) {
      dragTo(dragging, (event as MouseEvent).clientX, (event as MouseEvent).clientY);
    }
  });
  svg.addEventListener("mouseup", () => {
    dragging = null;
  });
  svg.addEventListener("click", (event) => {
    const target = event.target as Element;
    const circleId = target.getAttribute("data-circle-id");
    const lineId = target.getAttribute("data-line-id");
    if (circleId !== null) {
      circleClick(Number(circleId));
    } else if (lineId !== null) {
      lineClick(Number(lineId));
    } else {
      canvasClick((event as MouseEvent).clientX, (event as MouseEvent).clientY);
    }
  });
  svg.addEventListener("dblclick", (event) => {
    const target = event.target as Element;
    const circleId = target.getAttribute("data-circle-id");
    const lineId = target.getAttribute("data-line-id");
    if (circleId !== null) {
      openLabelEditor("circle", Number(circleId));
    } else if (lineId !== null) {
      openLabelEditor("line", Number(lineId));
    }
  });

  function render(): void {
    while (svg.firstChild) {
      svg.removeChild(svg.firstChild);
    }
    for (const line of state.lines) {
      const a = circleAt(state, line.from);
      const b = circleAt(state, line.to);
      const el = doc.createElementNS(SVG_NS, "line");
      el.setAttribute("x1", String(a.x));
      el.setAttribute("y1", String(a.y));
      el.setAttribute("x2", String(b.x));
      el.setAttribute("y2", String(b.y));
      el.setAttribute("data-line-id", String(line.id));
      if (line.style.stroke === "dotted") {
        el.setAttribute("stroke-dasharray", "4 3");
      }
      svg.appendChild(el);
      if (line.label !== null) {
        const mid = lineMidpoint(state, line);
        const text = doc.createElementNS(SVG_NS, "text");
        text.setAttribute("x", String(mid.x));
        text.setAttribute("y", String(mid.y));
        text.setAttribute("data-line-label", String(line.id));
        text.textContent = line.label;
        svg.appendChild(text);
      }
    }
    for (const circle of state.circles) {
      const el = doc.createElementNS(SVG_NS, "circle");
      el.setAttribute("cx", String(circle.x));
      el.setAttribute("cy", String(circle.y));
      el.setAttribute("r", "14");
      el.setAttribute("data-circle-id", String(circle.id));
      svg.appendChild(el);
      if (circle.label !== null) {
        const text = doc.createElementNS(SVG_NS, "text");
        text.setAttribute("x", String(circle.x));
        text.setAttribute("y", String(circle.y));
        text.setAttribute("data-circle-label", String(circle.id));
        text.textContent = circle.label;
        svg.appendChild(text);
      }
    }
  }

  function renderTemplate(template: Template, rotation: number): void {
    templateBox.innerHTML = "";
    const caption = doc.createElement("div");
    caption.className = "template-caption";
    caption.textContent = `template ${rotation}: label this shape (${template.p} circles)`;
    templateBox.appendChild(caption);
    const mini = doc.createElementNS(SVG_NS, "svg");
    mini.setAttribute("class", "template-shape");
    const r = 60;
    const cx = 80;
    const cy = 80;
    const pos = (v: number): [number, number] => [
      cx + r * Math.cos((2 * Math.PI * v) / template.p),
      cy + r * Math.sin((2 * Math.PI * v) / template.p),
    ];
    for (const [u, v] of template.edges) {
      const [x1, y1] = pos(u);
      const [x2, y2] = pos(v);
      const el = doc.createElementNS(SVG_NS, "line");
      el.setAttribute("x1", String(x1));
      el.setAttribute("y1", String(y1));
      el.setAttribute("x2", String(x2));
      el.setAttribute("y2", String(y2));
      mini.appendChild(el);
    }
    for (let v = 0; v < template.p; v += 1) {
      const [x, y] = pos(v);
      const el = doc.createElementNS(SVG_NS, "circle");
      el.setAttribute("cx", String(x));
      el.setAttribute("cy", String(y));
      el.setAttribute("r", "8");
      el.setAttribute("data-template-vertex", String(v));
      mini.appendChild(el);
    }
    templateBox.appendChild(mini);
  }

  flow.onChange((fs) => {
    root.dataset.flow = fs.kind;
    if (fs.kind === "challenge") {
      hint(`round ${fs.round}: draw and label your key, then submit`);
      renderTemplate(fs.template, fs.rotation);
    } else if (fs.kind === "accepted") {
      hint(`accepted after ${fs.rounds} rounds`);
      templateBox.innerHTML = "";
    } else if (fs.kind === "rejected") {
      hint("rejected");
      templateBox.innerHTML = "";
    } else if (fs.kind === "trouble") {
      hint(fs.canRetry ? `${fs.message} (retry available)` : fs.message);
    }
  });

  setTool("circle");
  render();

  return {
    root,
    flow,
    getCanvas: () => state,
    setTool,
    canvasClick,
    circleClick,
    lineClick,
    dragTo,
    editLabel,
    statusText: () => status.textContent ?? "",
    submit: submitCurrent,
    begin: (userId: string) => flow.begin(userId),
    retry: () => flow.retry(),
  };
}
