import { describe, expect, it } from "vitest";

import { projectPoint, scene3dOps } from "../src/scenegraph.js";
import { initialCamera, orbit, zoomBy } from "../src/state.js";
import { tinyScene3d, wrongMathScene } from "./fixtures.js";

const camera = { ...initialCamera };

describe("3d scene graph", () => {
  it("draws a cell for exactly the filled alcoves", () => {
    const scene = tinyScene3d();
    const ops = scene3dOps(scene, camera);
    const cells = ops.filter((op) => op.kind === "cell");
    const filled = scene.alcoves.filter((a) => a.fill !== null);
    expect(cells).toHaveLength(filled.length);
    expect(new Set(cells.map((c) => c.fill))).toEqual(new Set(filled.map((a) => a.fill)));
    expect(cells.some((c) => c.striped)).toBe(true);
  });

  it("draws the red origin dot and the wireframe edges", () => {
    const ops = scene3dOps(tinyScene3d(), camera);
    expect(ops.filter((op) => op.kind === "origin")).toHaveLength(1);
    expect(ops.filter((op) => op.kind === "edge")).toHaveLength(3);
  });

  it("sorts cells back to front for the painter", () => {
    const cells = scene3dOps(tinyScene3d(), camera).filter((op) => op.kind === "cell");
    const depths = cells.map((c) => c.depth);
    expect(depths).toEqual([...depths].sort((a, b) => a - b));
  });

  it("camera orbit changes projections but not the scene document", () => {
    const scene = tinyScene3d();
    const before = JSON.stringify(scene);
    const turned = orbit(zoomBy(camera, 1.3), 0.5, -0.2);
    const a = projectPoint([1, 0, 0], camera);
    const b = projectPoint([1, 0, 0], turned);
    expect(a).not.toEqual(b);
    scene3dOps(scene, turned);
    expect(JSON.stringify(scene)).toBe(before);
  });

  it("rejects 2d scenes", () => {
    expect(() => scene3dOps(wrongMathScene(), camera)).toThrow(/dimension/);
  });
});
