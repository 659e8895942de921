/** DOM wiring for the explorer: form, compute round-trips, result list. */

import { ApiClient, ApiError } from "./api.js";
import { render2d } from "./render2d.js";
import { render3d } from "./render3d.js";
import {
  applyExample,
  applyFailure,
  applyResponse,
  beginRequest,
  clickResultEntry,
  currentRequest,
  initialState,
  orbit,
  selectType,
  setBound,
  setMode,
  zoomBy,
  type ViewState,
} from "./state.js";
import type { Mode, QuickExample } from "./types.js";

const api = new ApiClient("");

function el<T extends HTMLElement>(id: string): T {
  const found = document.getElementById(id);
  if (found === null) {
    throw new Error(`missing element #${id}`);
  }
  return found as T;
}

async function bootstrap(): Promise<void> {
  const [types, examples] = await Promise.all([api.types(), api.examples()]);
  let state: ViewState = initialState(types);

  const typeSelect = el<HTMLSelectElement>("type");
  const modeSelect = el<HTMLSelectElement>("mode");
  const exampleSelect = el<HTMLSelectElement>("example");
  const xInput = el<HTMLInputElement>("x");
  const yInput = el<HTMLInputElement>("y");
  const yRow = el<HTMLDivElement>("y-row");
  const boundInput = el<HTMLInputElement>("bound");
  const boundValue = el<HTMLSpanElement>("bound-value");
  const banner = el<HTMLDivElement>("banner");
  const resultList = el<HTMLUListElement>("results");
  const reportPre = el<HTMLPreElement>("report");
  const svg = el<HTMLElement>("view2d") as unknown as SVGSVGElement;
  const canvas = el<HTMLCanvasElement>("view3d");

  for (const t of types) {
    const option = document.createElement("option");
    option.value = t.tag;
    option.textContent = t.tag;
    typeSelect.appendChild(option);
  }
  examples.forEach((ex: QuickExample, i: number) => {
    const option = document.createElement("option");
    option.value = String(i);
    option.textContent = ex.title;
    exampleSelect.appendChild(option);
  });

  function sync(): void {
    typeSelect.value = state.selectedType;
    modeSelect.value = state.mode;
    xInput.value = state.xInput;
    yInput.value = state.yInput;
    yRow.style.display = state.mode === "coconjugation" ? "" : "none";
    boundInput.value = String(state.bound);
    boundValue.textContent = String(state.bound);
    banner.textContent = state.banner ?? "";
    banner.style.display = state.banner === null ? "none" : "";
    resultList.replaceChildren(
      ...state.elements.map((entry) => {
        const item = document.createElement("li");
        const a = document.createElement("a");
        a.href = "#";
        a.textContent = `${entry.word} = ${entry.input}`;
        a.addEventListener("click", (event) => {
          event.preventDefault();
          state = clickResultEntry(state, entry);
          sync();
        });
        item.appendChild(a);
        return item;
      }),
    );
    reportPre.textContent = state.report;
    redraw();
  }

  function redraw(): void {
    const scene = state.scene;
    const is3d = scene !== null && scene.dimension === 3;
    svg.style.display = is3d ? "none" : "";
    canvas.style.display = is3d ? "" : "none";
    if (scene === null) {
      return;
    }
    if (scene.dimension === 2) {
      render2d(scene, svg);
    } else {
      render3d(scene, canvas, state.camera);
    }
  }

  async function compute(): Promise<void> {
    const begun = beginRequest(state);
    state = begun.state;
    const request = currentRequest(state);
    try {
      const { status, body } = await api.compute(request);
      state = applyResponse(state, begun.seq, status, body);
    } catch (err) {
      const message = err instanceof ApiError ? `${err.code}: ${err.message}` : String(err);
      state = applyFailure(state, begun.seq, message);
    }
    sync();
  }

  typeSelect.addEventListener("change", () => {
    state = selectType(state, typeSelect.value);
    sync();
  });
  modeSelect.addEventListener("change", () => {
    state = setMode(state, modeSelect.value as Mode);
    sync();
  });
  exampleSelect.addEventListener("change", () => {
    const ex = examples[Number(exampleSelect.value)];
    if (ex !== undefined) {
      state = applyExample(state, ex);
      sync();
      void compute();
    }
  });
  xInput.addEventListener("input", () => {
    state = { ...state, xInput: xInput.value };
  });
  yInput.addEventListener("input", () => {
    state = { ...state, yInput: yInput.value };
  });
  boundInput.addEventListener("input", () => {
    state = setBound(state, Number(boundInput.value));
    boundValue.textContent = String(state.bound);
  });
  el<HTMLButtonElement>("compute").addEventListener("click", () => void compute());

  let dragging = false;
  let last: [number, number] = [0, 0];
  canvas.addEventListener("mousedown", (event) => {
    dragging = true;
    last = [event.clientX, event.clientY];
  });
  window.addEventListener("mouseup", () => {
    dragging = false;
  });
  window.addEventListener("mousemove", (event) => {
    if (!dragging) {
      return;
    }
    const dx = (event.clientX - last[0]) * 0.01;
    const dy = (event.clientY - last[1]) * 0.01;
    last = [event.clientX, event.clientY];
    state = { ...state, camera: orbit(state.camera, dx, dy) };
    redraw(); // camera only; the scene document is untouched
  });
  canvas.addEventListener("wheel", (event) => {
    event.preventDefault();
    state = { ...state, camera: zoomBy(state.camera, event.deltaY < 0 ? 1.1 : 0.9) };
    redraw();
  });

  sync();
}

void bootstrap();
