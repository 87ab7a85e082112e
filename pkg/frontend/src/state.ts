import type {
  ChartData,
  DrillResponse,
  PivotRequest,
  PivotResponse,
  SchemaInfo,
  ViewCountInfo,
} from "./types.js";

/** Legends stay readable up to four stacked vertical values. */
export const MAX_VERTICALS = 4;

export interface ExplorerState {
  schema: SchemaInfo | null;
  horizontal: string;
  /** Vertical dimensions in the user's display order. */
  verticals: string[];
  /** Active filter: dimension -> selected values (empty = no clause). */
  filters: Record<string, string[]>;
  /** Observed values per dimension, for the filter pickers. */
  dimensionValues: Record<string, string[]>;
  chartMode: "bar" | "line";
  report: PivotResponse | null;
  chart: ChartData | null;
  drill: DrillResponse | null;
  viewCounts: ViewCountInfo | null;
  error: string | null;
}

export function initialState(): ExplorerState {
  return {
    schema: null,
    horizontal: "",
    verticals: [],
    filters: {},
    dimensionValues: {},
    chartMode: "bar",
    report: null,
    chart: null,
    drill: null,
    viewCounts: null,
    error: null,
  };
}

export function withSchema(
  state: ExplorerState,
  schema: SchemaInfo,
  dimensionValues: Record<string, string[]>,
  viewCounts: ViewCountInfo,
): ExplorerState {
  return {
    ...state,
    schema,
    dimensionValues,
    viewCounts,
    horizontal: schema.dimensions[0] ?? "",
    verticals: [],
    filters: {},
  };
}

export function setHorizontal(state: ExplorerState, dim: string): ExplorerState {
  if (!state.schema?.dimensions.includes(dim)) return state;
  return {
    ...state,
    horizontal: dim,
    verticals: state.verticals.filter((v) => v !== dim),
  };
}

export function toggleVertical(state: ExplorerState, dim: string): ExplorerState {
  if (!state.schema?.dimensions.includes(dim) || dim === state.horizontal) return state;
  if (state.verticals.includes(dim)) {
    return { ...state, verticals: state.verticals.filter((v) => v !== dim) };
  }
  if (state.verticals.length >= MAX_VERTICALS) return state;
  return { ...state, verticals: [...state.verticals, dim] };
}

/** Reorder the display position of one vertical; the set never changes. */
export function moveVertical(state: ExplorerState, dim: string, delta: -1 | 1): ExplorerState {
  const index = state.verticals.indexOf(dim);
  const target = index + delta;
  if (index < 0 || target < 0 || target >= state.verticals.length) return state;
  const verticals = [...state.verticals];
  verticals[index] = verticals[target]!;
  verticals[target] = dim;
  return { ...state, verticals };
}

export function setFilterValues(
  state: ExplorerState,
  dim: string,
  values: string[],
): ExplorerState {
  const filters = { ...state.filters };
  if (values.length) {
    filters[dim] = values;
  } else {
    delete filters[dim];
  }
  return { ...state, filters };
}

/** The request the current configuration translates to. */
export function pivotRequest(state: ExplorerState): PivotRequest {
  return {
    horizontal: state.horizontal,
    verticals: state.verticals,
    filter: { ...state.filters },
    display_vertical_order: state.verticals,
  };
}

/**
 * Coordinates identifying one report cell for drill-down: the horizontal
 * value, the cell's vertical values, and any single-valued filter clause
 * (a filter that pins a dimension to one value is part of the cell's
 * identity even though it is not drawn).
 */
export function drillCoords(
  state: ExplorerState,
  rowKey: string,
  colKey: Record<string, string>,
): Record<string, string> {
  const coords: Record<string, string> = { [state.horizontal]: rowKey, ...colKey };
  for (const [dim, values] of Object.entries(state.filters)) {
    if (values.length === 1 && !(dim in coords)) {
      coords[dim] = values[0]!;
    }
  }
  return coords;
}
