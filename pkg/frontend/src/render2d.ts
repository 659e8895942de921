/** Replay 2D draw ops into an SVG element (viewport transform only). */

import type { DrawOp2D, Vec2 } from "./scenegraph.js";
import { scene2dOps } from "./scenegraph.js";
import type { SceneDoc } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const OUTLINE_HEX = { red: "#d00000", blue: "#0040c0" } as const;

function opPoints(op: DrawOp2D): Vec2[] {
  switch (op.kind) {
    case "polygon":
    case "stripes":
    case "outline":
      return op.points;
    case "dot":
      return [op.at];
    case "arrow":
      return [op.tail, op.head];
    case "label":
      return [op.at];
  }
}

export function render2d(scene: SceneDoc, svg: SVGSVGElement, labelZoomThreshold = 0): void {
  const ops = scene2dOps(scene);
  while (svg.firstChild) {
    svg.removeChild(svg.firstChild);
  }
  const xs: number[] = [];
  const ys: number[] = [];
  for (const op of ops) {
    for (const [x, y] of opPoints(op)) {
      xs.push(x);
      ys.push(-y);
    }
  }
  const margin = 0.4;
  const minX = Math.min(...xs) - margin;
  const maxX = Math.max(...xs) + margin;
  const minY = Math.min(...ys) - margin;
  const maxY = Math.max(...ys) + margin;
  svg.setAttribute("viewBox", `${minX} ${minY} ${maxX - minX} ${maxY - minY}`);

  const defs = document.createElementNS(SVG_NS, "defs");
  defs.innerHTML =
    '<pattern id="ui-stripes" patternUnits="userSpaceOnUse" width="0.12" height="0.12" ' +
    'patternTransform="rotate(45)"><line x1="0" y1="0" x2="0" y2="0.12" ' +
    'stroke="#000000" stroke-opacity="0.45" stroke-width="0.05"/></pattern>';
  svg.appendChild(defs);

  const pts = (points: Vec2[]) => points.map(([x, y]) => `${x},${-y}`).join(" ");
  for (const op of ops) {
    switch (op.kind) {
      case "polygon": {
        const el = document.createElementNS(SVG_NS, "polygon");
        el.setAttribute("points", pts(op.points));
        el.setAttribute("fill", op.fill ?? "none");
        el.setAttribute("stroke", "#555555");
        el.setAttribute("stroke-width", "0.012");
        svg.appendChild(el);
        break;
      }
      case "stripes": {
        const el = document.createElementNS(SVG_NS, "polygon");
        el.setAttribute("points", pts(op.points));
        el.setAttribute("fill", "url(#ui-stripes)");
        svg.appendChild(el);
        break;
      }
      case "outline": {
        const el = document.createElementNS(SVG_NS, "polygon");
        el.setAttribute("points", pts(op.points));
        el.setAttribute("fill", "none");
        el.setAttribute("stroke", OUTLINE_HEX[op.color]);
        el.setAttribute("stroke-width", "0.05");
        svg.appendChild(el);
        break;
      }
      case "dot": {
        const el = document.createElementNS(SVG_NS, "circle");
        el.setAttribute("cx", String(op.at[0]));
        el.setAttribute("cy", String(-op.at[1]));
        el.setAttribute("r", "0.05");
        el.setAttribute("fill", "#000000");
        svg.appendChild(el);
        break;
      }
      case "arrow": {
        const el = document.createElementNS(SVG_NS, "line");
        el.setAttribute("x1", String(op.tail[0]));
        el.setAttribute("y1", String(-op.tail[1]));
        el.setAttribute("x2", String(op.head[0]));
        el.setAttribute("y2", String(-op.head[1]));
        el.setAttribute("stroke", OUTLINE_HEX[op.color]);
        el.setAttribute("stroke-width", "0.04");
        svg.appendChild(el);
        break;
      }
      case "label": {
        if (op.size < labelZoomThreshold) {
          break; // hidden below the zoom threshold to avoid clutter
        }
        const el = document.createElementNS(SVG_NS, "text");
        el.setAttribute("x", String(op.at[0]));
        el.setAttribute("y", String(-op.at[1]));
        el.setAttribute("font-size", String(op.size));
        el.setAttribute("text-anchor", "middle");
        el.setAttribute("dominant-baseline", "middle");
        el.setAttribute("font-family", "sans-serif");
        el.textContent = op.text;
        svg.appendChild(el);
        break;
      }
    }
  }
}
