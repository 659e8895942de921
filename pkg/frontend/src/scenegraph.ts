/** Scene graphs: flat draw-op lists built verbatim from scene documents.
 *
 * Tests inspect these ops directly; the DOM layer only replays them.  The
 * sole geometry performed here is the affine viewport/camera transform;
 * fills, stripes, labels and outlines are copied from the scene untouched.
 */

import type { Camera } from "./state.js";
import type { Point, SceneDoc } from "./types.js";

export type Vec2 = [number, number];

export type DrawOp2D =
  | { kind: "polygon"; points: Vec2[]; fill: string | null }
  | { kind: "stripes"; points: Vec2[] }
  | { kind: "outline"; points: Vec2[]; color: "red" | "blue" }
  | { kind: "dot"; at: Vec2 }
  | { kind: "arrow"; tail: Vec2; head: Vec2; color: "red" | "blue" }
  | { kind: "label"; at: Vec2; text: string; size: number };

function centroid(points: Vec2[]): Vec2 {
  let sx = 0;
  let sy = 0;
  for (const [x, y] of points) {
    sx += x;
    sy += y;
  }
  return [sx / points.length, sy / points.length];
}

function asVec2(p: Point): Vec2 {
  return [p[0] ?? 0, p[1] ?? 0];
}

export function scene2dOps(scene: SceneDoc): DrawOp2D[] {
  if (scene.dimension !== 2) {
    throw new Error(`expected a 2-dimensional scene, got dimension ${scene.dimension}`);
  }
  const ops: DrawOp2D[] = [];
  const polygons = scene.alcoves.map((a) => a.vertices.map(asVec2));
  scene.alcoves.forEach((alcove, i) => {
    ops.push({ kind: "polygon", points: polygons[i]!, fill: alcove.fill });
  });
  scene.alcoves.forEach((alcove, i) => {
    if (alcove.striped) {
      ops.push({ kind: "stripes", points: polygons[i]! });
    }
  });
  scene.alcoves.forEach((alcove, i) => {
    if (alcove.outline !== null) {
      ops.push({ kind: "outline", points: polygons[i]!, color: alcove.outline });
    }
  });
  for (const dot of scene.decorations.dots) {
    ops.push({ kind: "dot", at: asVec2(dot) });
  }
  for (const arrow of scene.decorations.arrows) {
    ops.push({ kind: "arrow", tail: asVec2(arrow.tail), head: asVec2(arrow.head), color: arrow.color });
  }
  scene.alcoves.forEach((alcove, i) => {
    if (alcove.label !== null) {
      ops.push({
        kind: "label",
        at: centroid(polygons[i]!),
        text: alcove.label,
        size: alcove.label_size ?? 0.2,
      });
    }
  });
  return ops;
}

export type DrawOp3D =
  | { kind: "edge"; a: Vec2; b: Vec2 }
  | { kind: "cell"; faces: Vec2[][]; fill: string; striped: boolean; depth: number }
  | { kind: "origin"; at: Vec2 }
  | { kind: "label"; at: Vec2; text: string; size: number; depth: number };

export function projectPoint(p: Point, camera: Camera): [number, number, number] {
  const [x = 0, y = 0, z = 0] = p;
  const cy = Math.cos(camera.yaw);
  const sy = Math.sin(camera.yaw);
  const cp = Math.cos(camera.pitch);
  const sp = Math.sin(camera.pitch);
  // yaw about the vertical axis, then pitch about the horizontal one
  const x1 = cy * x + sy * z;
  const z1 = -sy * x + cy * z;
  const y2 = cp * y - sp * z1;
  const z2 = sp * y + cp * z1;
  return [x1 * camera.zoom, -y2 * camera.zoom, z2];
}

const TET_FACES: [number, number, number][] = [
  [0, 1, 2],
  [0, 1, 3],
  [0, 2, 3],
  [1, 2, 3],
];

export function scene3dOps(scene: SceneDoc, camera: Camera): DrawOp3D[] {
  if (scene.dimension !== 3) {
    throw new Error(`expected a 3-dimensional scene, got dimension ${scene.dimension}`);
  }
  const ops: DrawOp3D[] = [];
  for (const [a, b] of scene.wireframe_edges ?? []) {
    const pa = projectPoint(a, camera);
    const pb = projectPoint(b, camera);
    ops.push({ kind: "edge", a: [pa[0], pa[1]], b: [pb[0], pb[1]] });
  }
  const cells: Extract<DrawOp3D, { kind: "cell" }>[] = [];
  for (const alcove of scene.alcoves) {
    if (alcove.fill === null) {
      continue;
    }
    const projected = alcove.vertices.map((v) => projectPoint(v, camera));
    const depth = projected.reduce((acc, p) => acc + p[2], 0) / projected.length;
    const faces = TET_FACES.map((face) =>
      face.map((i) => {
        const p = projected[i] ?? projected[0]!;
        return [p[0], p[1]] as Vec2;
      }),
    );
    cells.push({ kind: "cell", faces, fill: alcove.fill, striped: alcove.striped, depth });
  }
  cells.sort((a, b) => a.depth - b.depth); // painter order, far cells first
  ops.push(...cells);
  if (scene.decorations.origin !== null) {
    const p = projectPoint(scene.decorations.origin, camera);
    ops.push({ kind: "origin", at: [p[0], p[1]] });
  }
  for (const alcove of scene.alcoves) {
    if (alcove.label === null) {
      continue;
    }
    const projected = alcove.vertices.map((v) => projectPoint(v, camera));
    const cx = projected.reduce((acc, p) => acc + p[0], 0) / projected.length;
    const cyy = projected.reduce((acc, p) => acc + p[1], 0) / projected.length;
    const depth = projected.reduce((acc, p) => acc + p[2], 0) / projected.length;
    ops.push({
      kind: "label",
      at: [cx, cyy],
      text: alcove.label,
      size: (alcove.label_size ?? 0.2) * camera.zoom,
      depth,
    });
  }
  return ops;
}
