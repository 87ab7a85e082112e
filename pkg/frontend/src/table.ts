import type { PivotResponse } from "./types.js";

export type CellHandler = (rowKey: string, colIndex: number) => void;

function cellLookup(report: PivotResponse): Map<string, number> {
  const lookup = new Map<string, number>();
  for (const cell of report.cells) {
    lookup.set(JSON.stringify([cell.row, cell.col]), cell.value);
  }
  return lookup;
}

/** The number report: one row per horizontal value, one column per
 * vertical combination, plus the grand total. Cells drill on click. */
export function renderNumberTable(
  container: HTMLElement,
  report: PivotResponse,
  onCell: CellHandler,
): void {
  container.innerHTML = "";
  const table = document.createElement("table");
  table.className = "number-table";

  const head = table.createTHead().insertRow();
  const corner = document.createElement("th");
  corner.textContent = report.config.horizontal;
  head.appendChild(corner);
  for (const label of report.legend_labels) {
    const th = document.createElement("th");
    th.className = "col-label";
    th.textContent = label === "" ? "total" : label;
    head.appendChild(th);
  }

  const lookup = cellLookup(report);
  const body = table.createTBody();
  for (const rowKey of report.row_keys) {
    const tr = body.insertRow();
    const th = document.createElement("th");
    th.textContent = rowKey;
    tr.appendChild(th);
    report.col_keys.forEach((colKey, colIndex) => {
      const value = lookup.get(JSON.stringify([rowKey, Object.values(colKey)]));
      const td = tr.insertCell();
      td.className = "cell";
      td.dataset.row = rowKey;
      td.dataset.colIndex = String(colIndex);
      if (value === undefined) {
        td.classList.add("empty");
        td.textContent = "";
      } else {
        td.textContent = String(value);
        td.addEventListener("click", () => onCell(rowKey, colIndex));
      }
    });
  }

  const foot = table.createTFoot().insertRow();
  const label = document.createElement("th");
  label.textContent = "grand total";
  label.colSpan = Math.max(report.col_keys.length, 1);
  foot.appendChild(label);
  const total = document.createElement("td");
  total.id = "grand-total";
  total.className = "grand-total";
  total.textContent = String(report.grand_total);
  foot.appendChild(total);

  container.appendChild(table);
}
