import type {
  CreateGameRequest,
  GameResponse,
  HintPayload,
  MovePayload,
  ProblemDetail,
  SolutionPayload,
} from "./types.js";

let apiBase = "";

/** Point the client at another origin (tests); empty string means same-origin. */
export function setApiBase(base: string): void {
  apiBase = base.replace(/\/$/, "");
}

export class ApiError extends Error {
  readonly code: string;
  readonly field?: string;
  readonly status: number;

  constructor(status: number, problem: ProblemDetail) {
    super(problem.message);
    this.name = "ApiError";
    this.status = status;
    this.code = problem.code;
    this.field = problem.field;
  }
}

async function request<T>(path: string, init?: RequestInit): Promise<T> {
  const response = await fetch(`${apiBase}${path}`, {
    headers: { "Content-Type": "application/json" },
    ...init,
  });
  if (!response.ok) {
    let problem: ProblemDetail;
    try {
      problem = (await response.json()) as ProblemDetail;
    } catch {
      problem = { code: "http_error", message: `request failed (${response.status})` };
    }
    throw new ApiError(response.status, problem);
  }
  return (await response.json()) as T;
}

export function createGame(body: CreateGameRequest): Promise<GameResponse> {
  return request<GameResponse>("/api/game", {
    method: "POST",
    body: JSON.stringify(body),
  });
}

export function getGame(sessionId: string): Promise<GameResponse> {
  return request<GameResponse>(`/api/game/${sessionId}`);
}

export function postMove(sessionId: string, move: MovePayload): Promise<GameResponse> {
  return request<GameResponse>(`/api/game/${sessionId}/move`, {
    method: "POST",
    body: JSON.stringify(move),
  });
}

export function postUndo(sessionId: string): Promise<GameResponse> {
  return request<GameResponse>(`/api/game/${sessionId}/undo`, { method: "POST" });
}

export function getHint(sessionId: string, budget?: number): Promise<HintPayload> {
  const query = budget === undefined ? "" : `?budget=${budget}`;
  return request<HintPayload>(`/api/game/${sessionId}/hint${query}`);
}

export function getSolution(sessionId: string, budget?: number): Promise<SolutionPayload> {
  const query = budget === undefined ? "" : `?budget=${budget}`;
  return request<SolutionPayload>(`/api/game/${sessionId}/solution${query}`);
}
