import type {
  CensusPayload,
  EmbeddingsPayload,
  GraphPayload,
  SkeletonPayload,
  SubtypePayload,
  TransformKind,
} from "./apitypes.js";

export class ApiError extends Error {
  constructor(message: string, readonly status: number) {
    super(message);
  }
}

/** Thin fetch wrapper over the explorer endpoints; all verdicts and edges
 * shown in the UI come from these calls, never from local computation. */
export class Client {
  constructor(private readonly base: string = "") {}

  private async get<T>(path: string, params: Record<string, string | number | null>): Promise<T> {
    const query = new URLSearchParams();
    for (const [key, value] of Object.entries(params)) {
      if (value !== null && value !== undefined) query.set(key, String(value));
    }
    const response = await fetch(`${this.base}${path}?${query}`);
    return this.unwrap(response);
  }

  private async unwrap<T>(response: Response): Promise<T> {
    const body = await response.json().catch(() => ({}));
    if (!response.ok) {
      const detail = (body as { error?: string }).error ?? response.statusText;
      throw new ApiError(detail, response.status);
    }
    return body as T;
  }

  graph(level: number, mode: string, low: string | null, high: string | null): Promise<GraphPayload> {
    return this.get("/api/graph", { level, mode, low, high });
  }

  subtype(lhs: string, rhs: string): Promise<SubtypePayload> {
    return this.get("/api/subtype", { lhs, rhs });
  }

  embeddings(level: number, cls: string, hole: number, kind: TransformKind,
             mode: string): Promise<EmbeddingsPayload> {
    return this.get("/api/embeddings", { level, class: cls, hole, kind, mode });
  }

  census(level: number, mode: string): Promise<CensusPayload> {
    return this.get("/api/census", { level, mode });
  }

  skeleton(): Promise<SkeletonPayload> {
    return this.get("/api/skeleton", {});
  }

  async loadSkeleton(source: string): Promise<SkeletonPayload> {
    const response = await fetch("/api/skeleton", {
      method: "POST",
      headers: { "content-type": "text/plain" },
      body: source,
    });
    return this.unwrap(response);
  }
}
