import type { ViewCountInfo } from "./types.js";

/** How many distinct pivot views this schema supports, per r and overall. */
export function renderViewCounter(container: HTMLElement, counts: ViewCountInfo | null): void {
  container.innerHTML = "";
  if (!counts) return;
  const heading = document.createElement("h3");
  heading.textContent = `Pivot views of this ${counts.n}-dimensional cube`;
  container.appendChild(heading);

  const perR = document.createElement("p");
  perR.className = "vc-per-r";
  perR.textContent = counts.per_r.join(" ");
  container.appendChild(perR);

  const total = document.createElement("p");
  total.className = "vc-total";
  total.textContent = `total ${counts.total}`;
  container.appendChild(total);

  const perHorizontal = document.createElement("p");
  perHorizontal.className = "vc-per-horizontal";
  perHorizontal.textContent = `per horizontal ${counts.per_horizontal}`;
  container.appendChild(perHorizontal);
}
