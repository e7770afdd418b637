/** Service client. Requests are queued so at most one is in flight;
 * later user actions wait their turn instead of racing. */

import type {
  ApiResponse,
  Arc,
  ClassifyResult,
  HomResult,
  MutateResult,
  Win,
} from "./types.js";

export interface ServiceClient {
  validate(family: string): Promise<ApiResponse<{ valid: boolean }>>;
  classify(family: string): Promise<ApiResponse<ClassifyResult>>;
  windowArcs(family: string, w: Win): Promise<ApiResponse<{ arcs: Arc[] }>>;
  mutate(family: string, arc: Arc): Promise<ApiResponse<MutateResult>>;
  hom(x: Arc, y: Arc): Promise<ApiResponse<HomResult>>;
  render(
    family: string,
    w: Win,
    subject?: "arcs" | "quiver",
  ): Promise<ApiResponse<{ svg: string }>>;
}

type Fetcher = (url: string, init: RequestInit) => Promise<Response>;

export class HttpClient implements ServiceClient {
  private queue: Promise<unknown> = Promise.resolve();

  constructor(
    private readonly base: string = "",
    private readonly fetcher: Fetcher = (url, init) => fetch(url, init),
  ) {}

  private post<T>(path: string, body: unknown): Promise<ApiResponse<T>> {
    const task = this.queue.then(() => this.doPost<T>(path, body));
    this.queue = task.catch(() => undefined);
    return task;
  }

  private async doPost<T>(path: string, body: unknown): Promise<ApiResponse<T>> {
    try {
      const res = await this.fetcher(this.base + path, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(body),
      });
      return (await res.json()) as ApiResponse<T>;
    } catch (err) {
      return {
        ok: false,
        error: { kind: "network", message: String(err) },
      };
    }
  }

  validate(family: string) {
    return this.post<{ valid: boolean }>("/api/validate", { family });
  }

  classify(family: string) {
    return this.post<ClassifyResult>("/api/classify", { family });
  }

  windowArcs(family: string, w: Win) {
    return this.post<{ arcs: Arc[] }>("/api/window-arcs", {
      family,
      window: [w.lo, w.hi],
    });
  }

  mutate(family: string, arc: Arc) {
    return this.post<MutateResult>("/api/mutate", { family, arc: [arc[0], arc[1]] });
  }

  hom(x: Arc, y: Arc) {
    return this.post<HomResult>("/api/hom", { x: [x[0], x[1]], y: [y[0], y[1]] });
  }

  render(family: string, w: Win, subject: "arcs" | "quiver" = "arcs") {
    return this.post<{ svg: string }>("/api/render", {
      family,
      window: [w.lo, w.hi],
      subject,
    });
  }
}
