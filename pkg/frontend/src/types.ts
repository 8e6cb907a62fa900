/** Wire types mirroring the flood game service payloads. */

export type Variant = "free" | "fixed";

export interface MovePayload {
  vertex: number;
  color: number;
}

export interface BlobView {
  id: number;
  color: number;
  vertices: number[];
  neighbors: number[];
}

export interface StatePayload {
  n: number;
  k: number;
  variant: Variant;
  pivot?: number;
  blobs: BlobView[];
  vertex_colors: number[];
  move_count: number;
  distinct_colors: number;
  lower_bound: number;
  won: boolean;
  intervals?: [number, number][];
}

export interface GameResponse {
  session_id: string;
  state: StatePayload;
}

export interface HintPayload {
  move: MovePayload;
  remaining_opt: number;
  optimal: boolean;
}

export interface SolutionPayload {
  value: number;
  moves: MovePayload[];
  optimal: boolean;
}

export interface ProblemDetail {
  code: string;
  message: string;
  field?: string;
}

export interface GeneratorParams {
  kind: string;
  n: number;
  k: number;
  seed: number;
}

/** Parsed .flood.json document; the service validates the contents. */
export type InstanceDocument = Record<string, unknown>;

export interface CreateGameRequest {
  instance?: InstanceDocument;
  generator?: GeneratorParams;
  variant?: Variant;
  pivot?: number;
  budget?: number;
}
