import type { SceneDoc } from "../src/types.js";

/** A hand-built 2D scene whose styling is deliberately mathematical nonsense
 * (an "identity" alcove filled like a reflection, labels that match nothing):
 * the renderer must reproduce it verbatim, proving it re-derives nothing. */
export function wrongMathScene(): SceneDoc {
  return {
    version: 1,
    type: "A2",
    dimension: 2,
    bound: 1,
    alcoves: [
      {
        vertices: [[0, 0], [1, 0], [0, 1]],
        fill: "#123456",
        striped: true,
        label: "s_000000",
        label_size: 0.3,
        outline: "blue",
      },
      {
        vertices: [[1, 0], [1, 1], [0, 1]],
        fill: null,
        striped: false,
        label: null,
        label_size: null,
        outline: null,
      },
      {
        vertices: [[-1, 0], [0, 0], [0, -1]],
        fill: "#abcdef",
        striped: false,
        label: "e",
        label_size: 0.2,
        outline: "red",
      },
    ],
    decorations: {
      dots: [[0, 0], [1, 1]],
      arrows: [{ tail: [0, 0], head: [1, 0], color: "red" }],
      origin: null,
    },
    report: "synthetic",
  };
}

export function tinyScene3d(): SceneDoc {
  return {
    version: 1,
    type: "A3",
    dimension: 3,
    bound: 1,
    alcoves: [
      {
        vertices: [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]],
        fill: "#bdbdbd",
        striped: true,
        label: "e",
        label_size: 0.25,
        outline: "red",
      },
      {
        vertices: [[1, 0, 0], [2, 0, 0], [1, 1, 0], [1, 0, 1]],
        fill: null,
        striped: false,
        label: null,
        label_size: null,
        outline: null,
      },
      {
        vertices: [[0, 1, 0], [1, 1, 0], [0, 2, 0], [0, 1, 1]],
        fill: "#e6194b",
        striped: false,
        label: null,
        label_size: null,
        outline: null,
      },
    ],
    decorations: { dots: [], arrows: [], origin: [0, 0, 0] },
    wireframe_edges: [
      [[0, 0, 0], [1, 0, 0]],
      [[0, 0, 0], [0, 1, 0]],
      [[0, 0, 0], [0, 0, 1]],
    ],
    report: "synthetic",
  };
}
