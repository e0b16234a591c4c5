// Wire types for the session service. Counts, thresholds, ratios and
// certificate numbers are decimal strings: they outgrow doubles, so the
// UI never parses them into floats, only into BigInt for comparisons.

export type Strategy = "A" | "B";

export interface WireCylinder {
  k: number;
  members: number[];
}

export interface RoundData {
  x?: number;
  t?: number;
  y?: number;
}

export interface Certificate {
  k: number;
  y: number;
  h: number;
  g: number;
  s: number;
  subsets: string;
  cap: string;
}

export interface AuditCheckA {
  m: number;
  k: number;
  x: number;
  t: number;
  zero_target: number;
  zero_count: string;
  zero_ok: boolean;
  threshold: string;
  count_at_t: string;
  growth_ok: boolean;
}

export interface AuditCheckB {
  m: number;
  k: number;
  y: number;
  window: number;
  ratio: string;
  required: string;
  ratio_ok: boolean;
  certificate: Certificate | null;
}

export type AuditCheck = AuditCheckA | AuditCheckB;

export function isCheckA(check: AuditCheck): check is AuditCheckA {
  return "zero_ok" in check;
}

export function checkPasses(check: AuditCheck): boolean {
  return isCheckA(check) ? check.zero_ok && check.growth_ok : check.ratio_ok;
}

export interface AuditReport {
  strategy: Strategy;
  all_pass: boolean;
  checks: AuditCheck[];
}

export interface GrowthSpec {
  kind: "sqrt" | "log" | "power" | "table";
  e?: string;
  values?: number[];
  acknowledged?: boolean;
}

export interface CreateRequest {
  params: { h: number; g: number };
  strategy: Strategy;
  f: GrowthSpec | null;
  opening: WireCylinder;
}

export interface MoveRequest {
  round_index: number;
  move: WireCylinder;
}

// Shared shape of the create and move responses.
export interface RoundResponse {
  session_id: string;
  accepted?: boolean;
  awaiting: string;
  round_index: number;
  response: WireCylinder;
  round_data: RoundData;
  audit: AuditReport;
}

export interface PrefixView {
  elements: number[];
  valid_up_to: number;
  rep_table: { h: number; x_max: number; engine: string; counts: string[] };
}

export interface SessionView {
  params: { h: number; g: number };
  strategy: Strategy;
  f: GrowthSpec | null;
  awaiting: string;
  rounds: { player1: WireCylinder; player2: WireCylinder; round_data: RoundData }[];
  pending: WireCylinder | null;
  session_id: string;
  round_index: number;
}

export interface ApiErrorDetail {
  error: string;
  message: string;
  position?: number;
  expected?: number;
  got?: number;
  horizon?: number;
  previous?: number;
}
