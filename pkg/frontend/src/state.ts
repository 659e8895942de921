import type {
  ComputeRequest,
  ComputeResponse,
  ElementEntry,
  Mode,
  QuickExample,
  SceneDoc,
  TypeInfo,
} from "./types.js";

export interface Camera {
  yaw: number;
  pitch: number;
  zoom: number;
}

export interface ViewState {
  types: TypeInfo[];
  selectedType: string;
  mode: Mode;
  xInput: string;
  yInput: string;
  bound: number;
  scene: SceneDoc | null;
  elements: ElementEntry[];
  report: string;
  banner: string | null;
  camera: Camera;
  selection: string | null;
  /** request sequence numbers; stale responses are discarded (last write wins) */
  issuedSeq: number;
  appliedSeq: number;
}

export const initialCamera: Camera = { yaw: 0.6, pitch: 0.4, zoom: 90 };

export function initialState(types: TypeInfo[]): ViewState {
  const first = types[0];
  return {
    types,
    selectedType: first ? first.tag : "A2",
    mode: "conjugacy_class",
    xInput: "",
    yInput: "",
    bound: first ? first.suggested_bound : 5,
    scene: null,
    elements: [],
    report: "",
    banner: null,
    camera: { ...initialCamera },
    selection: null,
    issuedSeq: 0,
    appliedSeq: 0,
  };
}

export function clampBound(value: number): number {
  return Math.min(15, Math.max(1, Math.round(value)));
}

export function selectType(state: ViewState, tag: string): ViewState {
  const info = state.types.find((t) => t.tag === tag);
  return {
    ...state,
    selectedType: tag,
    bound: info ? info.suggested_bound : state.bound,
  };
}

export function setMode(state: ViewState, mode: Mode): ViewState {
  return { ...state, mode };
}

export function setBound(state: ViewState, bound: number): ViewState {
  return { ...state, bound: clampBound(bound) };
}

export function applyExample(state: ViewState, example: QuickExample): ViewState {
  const r = example.request;
  return {
    ...selectType(state, r.type),
    mode: r.mode,
    xInput: r.x,
    yInput: r.y ?? "",
    bound: clampBound(r.bound),
  };
}

/** Clicking a result entry seeds the next coconjugation query with it. */
export function clickResultEntry(state: ViewState, entry: ElementEntry): ViewState {
  return {
    ...state,
    mode: "coconjugation",
    yInput: entry.input,
    selection: entry.input,
  };
}

export function currentRequest(state: ViewState): ComputeRequest {
  const request: ComputeRequest = {
    type: state.selectedType,
    mode: state.mode,
    x: state.xInput,
    bound: state.bound,
  };
  if (state.mode === "coconjugation") {
    request.y = state.yInput;
  }
  return request;
}

export function beginRequest(state: ViewState): { state: ViewState; seq: number } {
  const seq = state.issuedSeq + 1;
  return { state: { ...state, issuedSeq: seq }, seq };
}

export function applyResponse(
  state: ViewState,
  seq: number,
  status: number,
  body: ComputeResponse,
): ViewState {
  if (seq <= state.appliedSeq) {
    return state; // a newer response already landed
  }
  const banner =
    status === 422 ? `coconjugation set is empty: ${body.reason ?? "no conjugators"}` : null;
  return {
    ...state,
    appliedSeq: seq,
    scene: body.scene,
    elements: body.elements,
    report: body.report,
    banner,
  };
}

export function applyFailure(state: ViewState, seq: number, message: string): ViewState {
  if (seq <= state.appliedSeq) {
    return state;
  }
  return { ...state, appliedSeq: seq, banner: message };
}

export function orbit(camera: Camera, dx: number, dy: number): Camera {
  const pitch = Math.min(1.5, Math.max(-1.5, camera.pitch + dy));
  return { yaw: camera.yaw + dx, pitch, zoom: camera.zoom };
}

export function zoomBy(camera: Camera, factor: number): Camera {
  return { ...camera, zoom: Math.min(2000, Math.max(10, camera.zoom * factor)) };
}
