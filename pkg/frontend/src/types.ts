/** Wire types for the compute service and the scene interchange document.
 *
 * The UI draws scenes verbatim: every fill, stripe flag, label and outline
 * comes straight from this document and is never re-derived client side.
 */

export type Point = number[];

export interface SceneAlcove {
  vertices: Point[];
  fill: string | null;
  striped: boolean;
  label: string | null;
  label_size: number | null;
  outline: "red" | "blue" | null;
}

export interface SceneArrow {
  tail: Point;
  head: Point;
  color: "red" | "blue";
}

export interface SceneDoc {
  version: 1;
  type: string;
  dimension: 2 | 3;
  bound: number;
  alcoves: SceneAlcove[];
  decorations: {
    dots: Point[];
    arrows: SceneArrow[];
    origin: Point | null;
  };
  wireframe_edges?: [Point, Point][];
  report: string;
}

export interface ElementEntry {
  word: string;
  input: string;
  translation: number[];
  spherical_word: string;
}

export interface ComputeResponse {
  scene: SceneDoc;
  report: string;
  elements: ElementEntry[];
  timing_ms: number;
  code?: string;
  reason?: string;
}

export interface TypeInfo {
  tag: string;
  rank: 2 | 3;
  suggested_bound: number;
  generator_indices: number[];
  spherical_generator_indices: number[];
}

export type Mode = "conjugacy_class" | "coconjugation" | "centralizer";

export interface ComputeRequest {
  type: string;
  mode: Mode;
  x: string;
  y?: string;
  bound: number;
}

export interface QuickExample {
  id: string;
  title: string;
  request: ComputeRequest;
}
