/**
 * Client for the authentication service JSON protocol.
 */

export interface Template {
  p: number;
  edges: [number, number][];
}

export interface ChallengeInfo {
  round: number;
  template: Template;
  rotation_position: number;
}

export interface StartResponse {
  session_id: string;
  round: number;
  challenge: ChallengeInfo;
}

export type RoundResult =
  | { result: "continue"; challenge: ChallengeInfo }
  | { result: "accepted" }
  | { result: "rejected" };

export class ApiError extends Error {
  constructor(
    message: string,
    readonly status: number,
  ) {
    super(message);
  }
}

export class NetworkError extends Error {}

export class AuthClient {
  constructor(readonly baseUrl: string) {}

  private async post<T>(path: string, payload: unknown): Promise<T> {
    let response: Response;
    try {
      response = await fetch(this.baseUrl + path, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(payload),
      });
    } catch (err) {
      throw new NetworkError(`cannot reach the server: ${String(err)}`);
    }
    const body = (await response.json()) as Record<string, unknown>;
    if (!response.ok) {
      throw new ApiError(String(body["error"] ?? response.statusText), response.status);
    }
    return body as T;
  }

  async health(): Promise<boolean> {
    try {
      const resp = await fetch(this.baseUrl + "/health");
      return resp.ok;
    } catch {
      return false;
    }
  }

  async register(userId: string, rounds: { graph: string; rule: string }[]): Promise<void> {
    await this.post("/users", { user_id: userId, rounds });
  }

  async startSession(userId: string): Promise<StartResponse> {
    return this.post<StartResponse>("/sessions", { user_id: userId });
  }

  async submitRound(sessionId: string, graph: string): Promise<RoundResult> {
    return this.post<RoundResult>(`/sessions/${sessionId}/rounds`, { graph });
  }
}
