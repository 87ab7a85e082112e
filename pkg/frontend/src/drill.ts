import type { DrillResponse } from "./types.js";

const BADGES = {
  consistent: { class: "badge-ok", text: "consistent" },
  mismatch: { class: "badge-mismatch", text: "mismatch" },
  "not-applicable": { class: "badge-na", text: "n/a" },
} as const;

/** Detail rows behind the last clicked cell, with the consistency badge. */
export function renderDrillPanel(container: HTMLElement, drill: DrillResponse | null): void {
  container.innerHTML = "";
  if (!drill) return;

  const heading = document.createElement("h3");
  heading.textContent =
    "Detail: " +
    Object.entries(drill.cell).map(([dim, value]) => `${dim}=${value}`).join(", ");
  container.appendChild(heading);

  const summary = document.createElement("p");
  summary.className = "drill-summary";
  const count = document.createElement("span");
  count.className = "cardinality";
  count.textContent = `${drill.cardinality} row${drill.cardinality === 1 ? "" : "s"}`;
  const badgeInfo = BADGES[drill.consistency.status];
  const badge = document.createElement("span");
  badge.className = `badge ${badgeInfo.class}`;
  badge.textContent =
    drill.consistency.status === "mismatch"
      ? `${badgeInfo.text} (expected ${drill.consistency.expected}, got ${drill.consistency.actual})`
      : badgeInfo.text;
  summary.append(count, " ", badge);
  container.appendChild(summary);

  if (!drill.rows.length) return;
  const table = document.createElement("table");
  table.className = "drill-table";
  if (drill.columns) {
    const head = table.createTHead().insertRow();
    for (const column of drill.columns) {
      const th = document.createElement("th");
      th.textContent = column;
      head.appendChild(th);
    }
  }
  const body = table.createTBody();
  for (const row of drill.rows) {
    const tr = body.insertRow();
    for (const value of row) {
      tr.insertCell().textContent = value;
    }
  }
  container.appendChild(table);
}
