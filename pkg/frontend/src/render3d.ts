/** Replay 3D draw ops onto a canvas: wireframe, translucent cells, origin. */

import type { Camera } from "./state.js";
import { scene3dOps } from "./scenegraph.js";
import type { SceneDoc } from "./types.js";

const CELL_ALPHA = 0.55;

function darken(hex: string): string {
  const n = parseInt(hex.slice(1), 16);
  const f = (v: number) => Math.max(0, Math.floor(v * 0.55));
  const r = f((n >> 16) & 0xff);
  const g = f((n >> 8) & 0xff);
  const b = f(n & 0xff);
  return `rgb(${r},${g},${b})`;
}

export function render3d(scene: SceneDoc, canvas: HTMLCanvasElement, camera: Camera): void {
  const ctx = canvas.getContext("2d");
  if (ctx === null) {
    return;
  }
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  ctx.save();
  ctx.translate(canvas.width / 2, canvas.height / 2);
  for (const op of scene3dOps(scene, camera)) {
    switch (op.kind) {
      case "edge": {
        ctx.strokeStyle = "rgba(60,60,60,0.35)";
        ctx.lineWidth = 0.6;
        ctx.beginPath();
        ctx.moveTo(op.a[0], op.a[1]);
        ctx.lineTo(op.b[0], op.b[1]);
        ctx.stroke();
        break;
      }
      case "cell": {
        ctx.globalAlpha = CELL_ALPHA;
        // a striped cell renders as a darker duplicate of its fill
        ctx.fillStyle = op.striped ? darken(op.fill) : op.fill;
        for (const face of op.faces) {
          ctx.beginPath();
          face.forEach(([x, y], i) => (i === 0 ? ctx.moveTo(x, y) : ctx.lineTo(x, y)));
          ctx.closePath();
          ctx.fill();
        }
        ctx.globalAlpha = 1;
        break;
      }
      case "origin": {
        ctx.fillStyle = "#d00000";
        ctx.beginPath();
        ctx.arc(op.at[0], op.at[1], 5, 0, 2 * Math.PI);
        ctx.fill();
        break;
      }
      case "label": {
        ctx.fillStyle = "#1a1a1a";
        ctx.font = `${Math.max(9, op.size)}px sans-serif`;
        ctx.textAlign = "center";
        ctx.fillText(op.text, op.at[0], op.at[1]);
        break;
      }
    }
  }
  ctx.restore();
}
