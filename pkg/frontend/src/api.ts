/**
 * API client with latest-wins semantics for live slider updates.
 *
 * Slider drags fire many overlapping assess calls; only the newest matters.
 * Each request gets a sequence number and stale responses resolve to null
 * so the caller never paints an outdated result.
 */
import type { AssessRequest, AssessResponse, ApiValidationError, SchemaDocument } from "./types.js";

export class ApiError extends Error {
  readonly status: number;
  readonly problems: string[];

  constructor(status: number, body: ApiValidationError | null) {
    super(body?.detail ?? `API request failed with status ${status}`);
    this.status = status;
    this.problems = body?.problems ?? [];
  }
}

export class ApiClient {
  private readonly baseUrl: string;
  private assessSequence = 0;

  constructor(baseUrl = "") {
    this.baseUrl = baseUrl.replace(/\/$/, "");
  }

  async getSchema(): Promise<SchemaDocument> {
    const response = await fetch(`${this.baseUrl}/api/schema`);
    if (!response.ok) {
      throw new ApiError(response.status, await safeJson(response));
    }
    return (await response.json()) as SchemaDocument;
  }

  /**
   * POST /api/assess.  Resolves to null when a newer call was issued while
   * this one was in flight (the newer call's result supersedes it).
   */
  async assess(request: AssessRequest): Promise<AssessResponse | null> {
    const sequence = ++this.assessSequence;
    const response = await fetch(`${this.baseUrl}/api/assess`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(request),
    });
    if (!response.ok) {
      throw new ApiError(response.status, await safeJson(response));
    }
    const body = (await response.json()) as AssessResponse;
    return sequence === this.assessSequence ? body : null;
  }
}

async function safeJson(response: Response): Promise<ApiValidationError | null> {
  try {
    return (await response.json()) as ApiValidationError;
  } catch {
    return null;
  }
}

/** Trailing-edge debounce; the pending call is replaced by newer ones. */
export function debounce<Args extends unknown[]>(
  fn: (...args: Args) => void,
  waitMs: number,
): (...args: Args) => void {
  let timer: ReturnType<typeof setTimeout> | undefined;
  return (...args: Args) => {
    if (timer !== undefined) {
      clearTimeout(timer);
    }
    timer = setTimeout(() => {
      timer = undefined;
      fn(...args);
    }, waitMs);
  };
}
