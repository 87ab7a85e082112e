import { ApiClient } from "./api.js";
import { renderChart, renderLegend } from "./chart.js";
import { renderDrillPanel } from "./drill.js";
import {
  drillCoords,
  ExplorerState,
  initialState,
  moveVertical,
  pivotRequest,
  setFilterValues,
  setHorizontal,
  toggleVertical,
  withSchema,
} from "./state.js";
import { renderNumberTable } from "./table.js";
import type { RollupResponse } from "./types.js";
import { renderViewCounter } from "./viewcounter.js";

const LAYOUT = `
  <header class="topbar">
    <h1>pivotcube explorer</h1>
    <div id="error" class="error" hidden></div>
  </header>
  <div class="layout">
    <aside class="controls">
      <section>
        <h3>Horizontal</h3>
        <select id="horizontal"></select>
      </section>
      <section>
        <h3>Verticals</h3>
        <div id="verticals"></div>
      </section>
      <section>
        <h3>Filters</h3>
        <div id="filters"></div>
      </section>
      <section id="view-counter" class="view-counter"></section>
    </aside>
    <main class="report">
      <div class="chart-head">
        <div id="legend" class="legend"></div>
        <button id="mode-toggle" type="button">line view</button>
      </div>
      <div id="chart" class="chart-box"></div>
      <div id="table" class="table-box"></div>
      <div id="drill" class="drill-box"></div>
    </main>
  </div>
`;

/**
 * The pivot explorer: pick a horizontal dimension, stack verticals (their
 * display order is yours to shuffle), narrow with filters, then read the
 * grouped chart and the number table side by side and click a cell to see
 * the detail rows behind it. All numbers come from the service; this page
 * never adds anything up.
 */
export class Explorer {
  state: ExplorerState = initialState();

  private pivotAbort: AbortController | null = null;
  private drillAbort: AbortController | null = null;
  private pending: Promise<void> = Promise.resolve();

  constructor(
    private readonly root: HTMLElement,
    private readonly api: ApiClient,
  ) {}

  /** Chain work so tests (and handlers) can await quiescence. */
  private schedule(work: () => Promise<void>): Promise<void> {
    this.pending = this.pending.then(work).catch((err) => this.showError(err));
    return this.pending;
  }

  settled(): Promise<void> {
    return this.pending;
  }

  async init(): Promise<void> {
    this.root.innerHTML = LAYOUT;
    this.el("#mode-toggle").addEventListener("click", () => {
      this.state = {
        ...this.state,
        chartMode: this.state.chartMode === "bar" ? "line" : "bar",
      };
      this.el("#mode-toggle").textContent =
        this.state.chartMode === "bar" ? "line view" : "bar view";
      this.renderReport();
    });
    await this.schedule(async () => {
      const schema = await this.api.schema();
      const [counts, ...rollups] = await Promise.all([
        this.api.viewCount(schema.n),
        ...schema.dimensions.map((dim) => this.api.rollup([dim])),
      ]);
      const values: Record<string, string[]> = {};
      schema.dimensions.forEach((dim, i) => {
        values[dim] = observedValues(rollups[i]!, dim);
      });
      this.state = withSchema(this.state, schema, values, counts);
      this.renderControls();
      renderViewCounter(this.el("#view-counter"), this.state.viewCounts);
    });
    await this.runPivot();
  }

  runPivot(): Promise<void> {
    return this.schedule(async () => {
      this.pivotAbort?.abort();
      const abort = (this.pivotAbort = new AbortController());
      const request = pivotRequest(this.state);
      try {
        const [report, chart] = await Promise.all([
          this.api.pivot(request, abort.signal),
          this.api.chart(request, abort.signal),
        ]);
        if (abort.signal.aborted) return; // superseded: latest wins
        this.state = { ...this.state, report, chart, drill: null, error: null };
        this.renderReport();
        renderDrillPanel(this.el("#drill"), null);
      } catch (err) {
        if (abort.signal.aborted) return;
        throw err;
      }
    });
  }

  drillCell(rowKey: string, colIndex: number): Promise<void> {
    return this.schedule(async () => {
      const { report, schema } = this.state;
      if (!report || !schema) return;
      const detail = schema.details[0];
      if (!detail) {
        this.showError(new Error("no detail table to drill into"));
        return;
      }
      this.drillAbort?.abort();
      const abort = (this.drillAbort = new AbortController());
      const colKey = report.col_keys[colIndex] ?? {};
      const coords = drillCoords(this.state, rowKey, colKey);
      try {
        const drill = await this.api.drill(coords, detail, abort.signal);
        if (abort.signal.aborted) return;
        this.state = { ...this.state, drill, error: null };
        renderDrillPanel(this.el("#drill"), drill);
      } catch (err) {
        if (abort.signal.aborted) return;
        throw err;
      }
    });
  }

  private renderControls(): void {
    const { schema } = this.state;
    if (!schema) return;

    const horizontal = this.el<HTMLSelectElement>("#horizontal");
    horizontal.innerHTML = "";
    for (const dim of schema.dimensions) {
      const option = document.createElement("option");
      option.value = dim;
      option.textContent = dim;
      option.selected = dim === this.state.horizontal;
      horizontal.appendChild(option);
    }
    horizontal.onchange = () => {
      this.state = setHorizontal(this.state, horizontal.value);
      this.renderControls();
      void this.runPivot();
    };

    this.renderVerticalPicker();
    this.renderFilterPicker();
  }

  private renderVerticalPicker(): void {
    const { schema } = this.state;
    if (!schema) return;
    const box = this.el("#verticals");
    box.innerHTML = "";
    const choices = [
      ...this.state.verticals,
      ...schema.dimensions.filter(
        (d) => d !== this.state.horizontal && !this.state.verticals.includes(d),
      ),
    ];
    for (const dim of choices) {
      const row = document.createElement("div");
      row.className = "vertical-row";
      const label = document.createElement("label");
      const checkbox = document.createElement("input");
      checkbox.type = "checkbox";
      checkbox.checked = this.state.verticals.includes(dim);
      checkbox.dataset.dim = dim;
      checkbox.addEventListener("change", () => {
        this.state = toggleVertical(this.state, dim);
        this.renderVerticalPicker();
        void this.runPivot();
      });
      label.append(checkbox, ` ${dim}`);
      row.appendChild(label);
      if (this.state.verticals.includes(dim)) {
        for (const [text, delta] of [["↑", -1], ["↓", 1]] as const) {
          const button = document.createElement("button");
          button.type = "button";
          button.className = delta === -1 ? "v-up" : "v-down";
          button.dataset.dim = dim;
          button.textContent = text;
          button.addEventListener("click", () => {
            this.state = moveVertical(this.state, dim, delta);
            this.renderVerticalPicker();
            void this.runPivot();
          });
          row.appendChild(button);
        }
      }
      box.appendChild(row);
    }
  }

  private renderFilterPicker(): void {
    const { schema } = this.state;
    if (!schema) return;
    const box = this.el("#filters");
    box.innerHTML = "";
    for (const dim of schema.dimensions) {
      const fieldset = document.createElement("fieldset");
      fieldset.dataset.dim = dim;
      const legend = document.createElement("legend");
      legend.textContent = dim;
      fieldset.appendChild(legend);
      for (const value of this.state.dimensionValues[dim] ?? []) {
        const label = document.createElement("label");
        label.className = "filter-value";
        const checkbox = document.createElement("input");
        checkbox.type = "checkbox";
        checkbox.dataset.dim = dim;
        checkbox.dataset.value = value;
        checkbox.checked = (this.state.filters[dim] ?? []).includes(value);
        checkbox.addEventListener("change", () => {
          const current = new Set(this.state.filters[dim] ?? []);
          if (checkbox.checked) {
            current.add(value);
          } else {
            current.delete(value);
          }
          this.state = setFilterValues(this.state, dim, [...current].sort());
          void this.runPivot();
        });
        label.append(checkbox, ` ${value || "(empty)"}`);
        fieldset.appendChild(label);
      }
      box.appendChild(fieldset);
    }
  }

  private renderReport(): void {
    const { report, chart, schema } = this.state;
    if (!report || !chart || !schema) return;
    renderLegend(this.el("#legend"), report.legend_labels, schema.measure);
    renderChart(this.el("#chart"), chart, this.state.chartMode);
    renderNumberTable(this.el("#table"), report, (row, col) => void this.drillCell(row, col));
  }

  private showError(err: unknown): void {
    const box = this.el("#error");
    const message = err instanceof Error ? err.message : String(err);
    this.state = { ...this.state, error: message };
    box.textContent = message;
    box.hidden = false;
  }

  private el<T extends HTMLElement = HTMLElement>(selector: string): T {
    const found = this.root.querySelector<T>(selector);
    if (!found) throw new Error(`missing element ${selector}`);
    return found;
  }
}

function observedValues(rollup: RollupResponse, dim: string): string[] {
  return rollup.rows.map((row) => String(row[dim] ?? "")).sort();
}
