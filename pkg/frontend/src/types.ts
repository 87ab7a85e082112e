/** Wire types for the pivotcube HTTP API. */

export interface SchemaInfo {
  dimensions: string[];
  measure: string;
  semantics: "count" | "sum";
  n: number;
  rows: number;
  details: string[];
}

export interface PivotRequest {
  horizontal: string;
  verticals: string[];
  filter: Record<string, string[]>;
  display_vertical_order?: string[];
}

export interface PivotCell {
  row: string;
  col: string[];
  value: number;
}

export interface PivotConfigInfo {
  horizontal: string;
  verticals: string[];
  display_verticals: string[];
}

export interface PivotResponse {
  config: PivotConfigInfo;
  row_keys: string[];
  col_keys: Record<string, string>[];
  legend_labels: string[];
  cells: PivotCell[];
  grand_total: number;
}

export interface ChartSeries {
  label: string;
  points: (number | null)[];
}

export interface ChartData {
  x_axis: string[];
  series: ChartSeries[];
}

export interface DrillConsistency {
  status: "consistent" | "mismatch" | "not-applicable";
  expected?: number;
  actual?: number;
}

export interface DrillResponse {
  cell: Record<string, string>;
  columns?: string[];
  rows: string[][];
  cardinality: number;
  consistency: DrillConsistency;
}

export interface ViewCountInfo {
  n: number;
  per_r: number[];
  total: number;
  per_horizontal: number;
}

export interface RollupResponse {
  dimensions: string[];
  measure: string;
  rows: Record<string, string | number>[];
  grand_total: number;
}
