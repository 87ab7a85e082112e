import type { ChartData } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const WIDTH = 680;
const HEIGHT = 300;
const MARGIN = { top: 12, right: 16, bottom: 28, left: 44 };

export const PALETTE = [
  "#4e79a7", "#f28e2b", "#59a14f", "#e15759",
  "#76b7b2", "#edc948", "#b07aa1", "#9c755f",
];

function svgEl<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string>,
): SVGElementTagNameMap[K] {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) el.setAttribute(key, value);
  return el;
}

function valueExtent(data: ChartData): [number, number] {
  let lo = 0;
  let hi = 0;
  for (const series of data.series) {
    for (const point of series.points) {
      if (point === null) continue;
      lo = Math.min(lo, point);
      hi = Math.max(hi, point);
    }
  }
  return hi === lo ? [lo, lo + 1] : [lo, hi];
}

/**
 * Grouped bars (or lines) from the server's chart series. Bars carry
 * data-x / data-series / data-value attributes so behavior is assertable
 * without pixel rendering; missing points leave gaps, never zeros.
 */
export function renderChart(
  container: HTMLElement,
  data: ChartData,
  mode: "bar" | "line",
): void {
  container.innerHTML = "";
  const svg = svgEl("svg", {
    viewBox: `0 0 ${WIDTH} ${HEIGHT}`,
    class: `chart chart-${mode}`,
    role: "img",
  });
  container.appendChild(svg);

  const plotW = WIDTH - MARGIN.left - MARGIN.right;
  const plotH = HEIGHT - MARGIN.top - MARGIN.bottom;
  const [lo, hi] = valueExtent(data);
  const yScale = (v: number) => MARGIN.top + plotH - ((v - lo) / (hi - lo)) * plotH;
  const baseline = yScale(Math.max(lo, 0));

  svg.appendChild(svgEl("line", {
    x1: String(MARGIN.left), y1: String(baseline),
    x2: String(WIDTH - MARGIN.right), y2: String(baseline),
    class: "axis",
  }));

  const groups = data.x_axis.length;
  const groupW = groups ? plotW / groups : plotW;

  data.x_axis.forEach((x, gi) => {
    const label = svgEl("text", {
      x: String(MARGIN.left + groupW * gi + groupW / 2),
      y: String(HEIGHT - 8),
      "text-anchor": "middle",
      class: "x-label",
    });
    label.textContent = x;
    svg.appendChild(label);
  });

  if (mode === "bar") {
    const slots = Math.max(data.series.length, 1);
    const barW = (groupW * 0.8) / slots;
    data.series.forEach((series, si) => {
      series.points.forEach((point, gi) => {
        if (point === null) return;
        const x = MARGIN.left + groupW * gi + groupW * 0.1 + barW * si;
        const top = Math.min(yScale(point), baseline);
        const bar = svgEl("rect", {
          x: x.toFixed(2),
          y: top.toFixed(2),
          width: barW.toFixed(2),
          height: Math.abs(yScale(point) - baseline).toFixed(2),
          fill: PALETTE[si % PALETTE.length]!,
          class: "bar",
          "data-series": series.label,
          "data-x": data.x_axis[gi]!,
          "data-value": String(point),
        });
        svg.appendChild(bar);
      });
    });
  } else {
    data.series.forEach((series, si) => {
      // split on nulls so gaps stay gaps
      let segment: string[] = [];
      const flush = () => {
        if (segment.length > 1) {
          svg.appendChild(svgEl("polyline", {
            points: segment.join(" "),
            fill: "none",
            stroke: PALETTE[si % PALETTE.length]!,
            "stroke-width": "2",
            class: "line",
            "data-series": series.label,
          }));
        }
        segment = [];
      };
      series.points.forEach((point, gi) => {
        if (point === null) {
          flush();
          return;
        }
        const x = MARGIN.left + groupW * gi + groupW / 2;
        segment.push(`${x.toFixed(2)},${yScale(point).toFixed(2)}`);
        svg.appendChild(svgEl("circle", {
          cx: x.toFixed(2),
          cy: yScale(point).toFixed(2),
          r: "3",
          fill: PALETTE[si % PALETTE.length]!,
          class: "dot",
          "data-series": series.label,
          "data-x": data.x_axis[gi]!,
          "data-value": String(point),
        }));
      });
      flush();
    });
  }
}

export function renderLegend(container: HTMLElement, labels: string[], measure: string): void {
  container.innerHTML = "";
  const shown = labels.length === 1 && labels[0] === "" ? [measure] : labels;
  shown.forEach((label, i) => {
    const item = document.createElement("span");
    item.className = "legend-item";
    const swatch = document.createElement("span");
    swatch.className = "swatch";
    swatch.style.background = PALETTE[i % PALETTE.length]!;
    const text = document.createElement("span");
    text.className = "legend-label";
    text.textContent = label;
    item.append(swatch, text);
    container.appendChild(item);
  });
}
