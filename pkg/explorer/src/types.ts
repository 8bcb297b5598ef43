// Payload shapes of the reqlens HTTP API plus runtime validators. The UI
// renders service-provided numbers only; validators reject anything that
// does not match the documented schema before any partial render happens.

export interface WordWeight {
  stem: string;
  weight: number;
}

export interface ExplanationPayload {
  requirement_id: number;
  prob_nfr: number;
  intercept: number;
  words: WordWeight[];
  text?: string;
  config_hash?: string;
}

export interface RequirementItem {
  id: number;
  text: string;
  raw_label: string;
  binary_label: string;
  prob_nfr: number;
  predicted_label: string;
  in_test: boolean;
}

export interface RequirementsPage {
  total: number;
  page: number;
  page_size: number;
  config_hash: string;
  items: RequirementItem[];
}

export interface Metrics {
  accuracy: number;
  precision: number;
  recall: number;
  f1: number;
  tp: number;
  fp: number;
  fn: number;
  tn: number;
}

export interface MetricsPayload {
  config_hash: string;
  seed: number;
  profile: {
    name: string;
    base: string;
    removed_stems: string[];
    custom_stems: string[];
  };
  current: Metrics;
  previous: Metrics | null;
}

export interface TopWord {
  stem: string;
  percentage: number;
}

export interface WordSetsPayload {
  config_hash: string;
  supportive: { counts: Record<string, number>; total: number; top30: TopWord[] };
  distractive: { counts: Record<string, number>; total: number; top30: TopWord[] };
  sets: { A: string[]; B: string[]; C: string[] };
  subclasses: Record<string, string>;
}

export interface FeedbackResponse {
  config_hash: string;
  metrics: Metrics;
  previous_metrics: Metrics | null;
  custom_stems: string[];
}

export class SchemaError extends Error {}

function isNumber(v: unknown): v is number {
  return typeof v === "number" && Number.isFinite(v);
}

function isStringArray(v: unknown): v is string[] {
  return Array.isArray(v) && v.every((x) => typeof x === "string");
}

export function validateExplanation(payload: unknown): ExplanationPayload {
  const p = payload as ExplanationPayload;
  if (
    !p ||
    !isNumber(p.requirement_id) ||
    !isNumber(p.prob_nfr) ||
    p.prob_nfr < 0 ||
    p.prob_nfr > 1 ||
    !isNumber(p.intercept) ||
    !Array.isArray(p.words) ||
    !p.words.every((w) => w && typeof w.stem === "string" && isNumber(w.weight))
  ) {
    throw new SchemaError("explanation payload does not match the service schema");
  }
  return p;
}

export function validateMetrics(payload: unknown): MetricsPayload {
  const p = payload as MetricsPayload;
  const ok = (m: unknown): boolean => {
    const x = m as Metrics;
    return !!x && ["accuracy", "precision", "recall", "f1"].every((k) => isNumber((x as any)[k]));
  };
  if (!p || typeof p.config_hash !== "string" || !ok(p.current) || (p.previous !== null && !ok(p.previous))) {
    throw new SchemaError("metrics payload does not match the service schema");
  }
  return p;
}

export function validateWordSets(payload: unknown): WordSetsPayload {
  const p = payload as WordSetsPayload;
  if (
    !p ||
    typeof p.config_hash !== "string" ||
    !p.sets ||
    !isStringArray(p.sets.A) ||
    !isStringArray(p.sets.B) ||
    !isStringArray(p.sets.C) ||
    !p.supportive ||
    !Array.isArray(p.supportive.top30) ||
    !p.distractive ||
    !Array.isArray(p.distractive.top30)
  ) {
    throw new SchemaError("word-sets payload does not match the service schema");
  }
  return p;
}

export function validateRequirementsPage(payload: unknown): RequirementsPage {
  const p = payload as RequirementsPage;
  if (
    !p ||
    !isNumber(p.total) ||
    !Array.isArray(p.items) ||
    typeof p.config_hash !== "string" ||
    !p.items.every((r) => isNumber(r.id) && typeof r.text === "string" && isNumber(r.prob_nfr))
  ) {
    throw new SchemaError("requirements payload does not match the service schema");
  }
  return p;
}
