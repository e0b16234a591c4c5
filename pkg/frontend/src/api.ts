import type {
  ApiErrorDetail,
  AuditReport,
  CreateRequest,
  MoveRequest,
  PrefixView,
  RoundResponse,
  SessionView,
} from "./types.js";

export class ApiError extends Error {
  constructor(public status: number, public detail: ApiErrorDetail) {
    super(detail.message ?? detail.error ?? `HTTP ${status}`);
  }
}

// The app talks to the service through this interface only; tests swap in
// a fixture-backed implementation.
export interface Api {
  createSession(request: CreateRequest): Promise<RoundResponse>;
  submitMove(sessionId: string, request: MoveRequest): Promise<RoundResponse>;
  fetchSession(sessionId: string): Promise<SessionView>;
  fetchAudit(sessionId: string): Promise<AuditReport>;
  fetchPrefix(sessionId: string, xMax?: number): Promise<PrefixView>;
}

export class HttpApi implements Api {
  constructor(private base: string = "") {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const res = await fetch(this.base + path, {
      headers: { "content-type": "application/json" },
      ...init,
    });
    const body = await res.json().catch(() => ({}));
    if (!res.ok) {
      const detail: ApiErrorDetail = body?.detail ?? {
        error: "http_error",
        message: `HTTP ${res.status}`,
      };
      throw new ApiError(res.status, detail);
    }
    return body as T;
  }

  createSession(request: CreateRequest): Promise<RoundResponse> {
    return this.request("/sessions", { method: "POST", body: JSON.stringify(request) });
  }

  submitMove(sessionId: string, request: MoveRequest): Promise<RoundResponse> {
    return this.request(`/sessions/${sessionId}/moves`, {
      method: "POST",
      body: JSON.stringify(request),
    });
  }

  fetchSession(sessionId: string): Promise<SessionView> {
    return this.request(`/sessions/${sessionId}`);
  }

  fetchAudit(sessionId: string): Promise<AuditReport> {
    return this.request(`/sessions/${sessionId}/audit`);
  }

  fetchPrefix(sessionId: string, xMax?: number): Promise<PrefixView> {
    const query = xMax === undefined ? "" : `?x_max=${xMax}`;
    return this.request(`/sessions/${sessionId}/prefix${query}`);
  }
}
