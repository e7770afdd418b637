/** Wire types mirroring the service JSON shapes. */

export type Arc = readonly [number, number];

export interface Win {
  lo: number;
  hi: number;
}

export interface FFInfo {
  functorially_finite: boolean;
  reason: { kind: string; vertex?: number; left?: number; right?: number };
}

export interface ClassifyResult {
  locally_finite: boolean;
  left_fountains: number[];
  right_fountains: number[];
  fountains: number[];
  ff: FFInfo | null;
}

export interface MutateResult {
  family: string;
  exchanged: Arc;
  removed: Arc;
  classification: Omit<ClassifyResult, "ff">;
  ff: FFInfo | null;
}

export interface HomResult {
  forward: number;
  reverse: number;
}

export interface ApiError {
  kind: string;
  message?: string;
  line?: number;
}

export type ApiResponse<T> = { ok: true; result: T } | { ok: false; error: ApiError };

export function sameArc(a: Arc, b: Arc): boolean {
  return a[0] === b[0] && a[1] === b[1];
}

export function arcLabel(a: Arc): string {
  return `(${a[0]},${a[1]})`;
}
