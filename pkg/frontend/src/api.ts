import type {
  ChartData,
  DrillResponse,
  PivotRequest,
  PivotResponse,
  RollupResponse,
  SchemaInfo,
  ViewCountInfo,
} from "./types.js";

export class ApiError extends Error {
  constructor(readonly code: string, message: string, readonly status: number) {
    super(message);
    this.name = "ApiError";
  }
}

async function parse<T>(response: Response): Promise<T> {
  const body = await response.json();
  if (!response.ok) {
    const err = body?.error ?? {};
    throw new ApiError(err.code ?? "http_error", err.message ?? response.statusText, response.status);
  }
  return body as T;
}

/** Thin client for the documented endpoints; aggregation stays server-side. */
export class ApiClient {
  constructor(private readonly baseUrl: string = "") {}

  private url(path: string, params?: [string, string][]): string {
    const query = params?.length
      ? "?" + params.map(([k, v]) => `${encodeURIComponent(k)}=${encodeURIComponent(v)}`).join("&")
      : "";
    return `${this.baseUrl}${path}${query}`;
  }

  async schema(signal?: AbortSignal): Promise<SchemaInfo> {
    return parse(await fetch(this.url("/api/schema"), { signal }));
  }

  async pivot(request: PivotRequest, signal?: AbortSignal): Promise<PivotResponse> {
    return parse(
      await fetch(this.url("/api/pivot"), {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify(request),
        signal,
      }),
    );
  }

  async chart(request: PivotRequest, signal?: AbortSignal): Promise<ChartData> {
    const params: [string, string][] = [["horizontal", request.horizontal]];
    for (const v of request.verticals) params.push(["vertical", v]);
    if (request.display_vertical_order?.length) {
      params.push(["display", request.display_vertical_order.join(",")]);
    }
    for (const [dim, values] of Object.entries(request.filter)) {
      if (values.length) params.push(["filter", `${dim}=${values.join(",")}`]);
    }
    return parse(await fetch(this.url("/api/chart", params), { signal }));
  }

  async drill(
    cell: Record<string, string>,
    detail: string,
    signal?: AbortSignal,
  ): Promise<DrillResponse> {
    return parse(
      await fetch(this.url("/api/drill"), {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify({ cell, detail }),
        signal,
      }),
    );
  }

  async rollup(keep: string[], signal?: AbortSignal): Promise<RollupResponse> {
    return parse(
      await fetch(this.url("/api/rollup"), {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify({ keep }),
        signal,
      }),
    );
  }

  async viewCount(n: number, signal?: AbortSignal): Promise<ViewCountInfo> {
    return parse(await fetch(this.url("/api/views/count", [["n", String(n)]]), { signal }));
  }
}
