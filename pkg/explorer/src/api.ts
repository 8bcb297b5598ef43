// Typed client for the reqlens service. Mutating calls always carry the
// last-known config hash; a 409 from the service surfaces as StaleConfigError
// so the caller can prompt for a reload instead of diverging silently.

import {
  ExplanationPayload,
  FeedbackResponse,
  MetricsPayload,
  RequirementsPage,
  WordSetsPayload,
  validateExplanation,
  validateMetrics,
  validateRequirementsPage,
  validateWordSets,
} from "./types.js";

export class StaleConfigError extends Error {
  constructor(public currentHash: string) {
    super("config hash is stale; reload required");
  }
}

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

async function getJSON(path: string): Promise<unknown> {
  const res = await fetch(path);
  if (!res.ok) throw new ApiError(res.status, await res.text());
  return res.json();
}

async function postJSON(path: string, body: unknown): Promise<unknown> {
  const res = await fetch(path, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(body),
  });
  if (res.status === 409) {
    const detail = (await res.json()) as { detail?: { config_hash?: string } };
    throw new StaleConfigError(detail.detail?.config_hash ?? "");
  }
  if (!res.ok) throw new ApiError(res.status, await res.text());
  return res.json();
}

export async function fetchRequirements(page = 1, pageSize = 50): Promise<RequirementsPage> {
  return validateRequirementsPage(await getJSON(`/api/requirements?page=${page}&page_size=${pageSize}`));
}

export async function fetchExplanation(id: number, samples?: number, topk?: number): Promise<ExplanationPayload> {
  const params = new URLSearchParams();
  if (samples !== undefined) params.set("samples", String(samples));
  if (topk !== undefined) params.set("topk", String(topk));
  const query = params.toString() ? `?${params.toString()}` : "";
  return validateExplanation(await getJSON(`/api/requirements/${id}/explanation${query}`));
}

export async function fetchMetrics(): Promise<MetricsPayload> {
  return validateMetrics(await getJSON("/api/metrics"));
}

export async function fetchWordSets(): Promise<WordSetsPayload> {
  return validateWordSets(await getJSON("/api/analysis/word-sets"));
}

export async function postFeedback(
  configHash: string,
  add: string[],
  remove: string[],
): Promise<FeedbackResponse> {
  return (await postJSON("/api/feedback/removed-words", {
    config_hash: configHash,
    add,
    remove,
  })) as FeedbackResponse;
}

export async function postRetrain(configHash: string, seed: number): Promise<FeedbackResponse> {
  return (await postJSON("/api/retrain", { config_hash: configHash, seed })) as FeedbackResponse;
}
