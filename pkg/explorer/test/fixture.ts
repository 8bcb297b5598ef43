// In-memory fixture implementing the documented service contract, installed
// behind global fetch so client code runs unmodified against it.

import {
  ExplanationPayload,
  Metrics,
  MetricsPayload,
  RequirementsPage,
  WordSetsPayload,
} from "../src/types.js";

const BASE_METRICS: Metrics = {
  accuracy: 0.85, precision: 0.84, recall: 0.91, f1: 0.87,
  tp: 66, fp: 12, fn: 6, tn: 41,
};

const RETRAINED_METRICS: Metrics = {
  accuracy: 0.87, precision: 0.86, recall: 0.9, f1: 0.88,
  tp: 65, fp: 10, fn: 7, tn: 43,
};

export const EXPLANATIONS: Record<number, ExplanationPayload> = {
  1: {
    requirement_id: 1,
    prob_nfr: 0.93,
    intercept: 0.62,
    text: "All representatives shall use the Disputes application after a training course.",
    words: [
      { stem: "train", weight: 0.3 },
      { stem: "displai", weight: -0.1 },
      { stem: "cours", weight: 0.22 },
      { stem: "disput", weight: -0.18 },
    ],
  },
  2: {
    requirement_id: 2,
    prob_nfr: 0.12,
    intercept: 0.4,
    text: "The system shall allow the user to delete a record.",
    words: [
      { stem: "allow", weight: -0.4 },
      { stem: "delet", weight: -0.2 },
      { stem: "user", weight: 0.05 },
    ],
  },
  3: {
    requirement_id: 3,
    prob_nfr: 0.5,
    intercept: 0.5,
    text: "Short requirement.",
    words: [],
  },
};

export const WORD_SETS: WordSetsPayload = {
  config_hash: "",
  supportive: {
    counts: { second: 8, train: 6, oper: 5 },
    total: 19,
    top30: Array.from({ length: 40 }, (_, i) => ({
      stem: `sup${String(i).padStart(2, "0")}`,
      percentage: 40 - i,
    })).slice(0, 30),
  },
  distractive: {
    counts: { allow: 9, disput: 7 },
    total: 16,
    top30: [
      { stem: "allow", percentage: 56.25 },
      { stem: "disput", percentage: 43.75 },
    ],
  },
  sets: {
    A: ["allow", "disput", "displai", "request"],
    B: ["oper", "second", "minut", "navig"],
    C: ["product", "shall", "system", "user"],
  },
  subclasses: { second: "PE", logon: "SE", train: "US" },
};

export class FixtureService {
  version = 0;
  customStems: string[] = [];
  current: Metrics = BASE_METRICS;
  previous: Metrics | null = null;
  seed = 7;
  requirements = Array.from({ length: 60 }, (_, i) => ({
    id: i,
    text: `Requirement number ${i} about the system.`,
    raw_label: i % 2 ? "SE" : "F",
    binary_label: i % 2 ? "NFR" : "FR",
    prob_nfr: i % 2 ? 0.9 : 0.2,
    predicted_label: i % 2 ? "NFR" : "FR",
    in_test: i % 5 === 0,
  }));
  receivedHashes: string[] = [];
  feedbackDelayMs = 0;
  brokenExplanations = false;

  get hash(): string {
    return `hash-${this.version}`;
  }

  private json(body: unknown, status = 200): Response {
    return new Response(JSON.stringify(body), {
      status,
      headers: { "Content-Type": "application/json" },
    });
  }

  private metricsPayload(): MetricsPayload {
    return {
      config_hash: this.hash,
      seed: this.seed,
      profile: {
        name: this.customStems.length ? "custom" : "A",
        base: "A",
        removed_stems: [...this.customStems],
        custom_stems: [...this.customStems],
      },
      current: this.current,
      previous: this.previous,
    };
  }

  async handle(url: string, init?: RequestInit): Promise<Response> {
    const u = new URL(url, "http://fixture.local");
    const path = u.pathname;

    if (path === "/api/requirements") {
      const page = Number(u.searchParams.get("page") ?? "1");
      const size = Number(u.searchParams.get("page_size") ?? "50");
      const body: RequirementsPage = {
        total: this.requirements.length,
        page,
        page_size: size,
        config_hash: this.hash,
        items: this.requirements.slice((page - 1) * size, page * size),
      };
      return this.json(body);
    }

    const explanationMatch = path.match(/^\/api\/requirements\/(\d+)\/explanation$/);
    if (explanationMatch) {
      const id = Number(explanationMatch[1]);
      if (this.brokenExplanations) {
        return this.json({ requirement_id: "oops", words: "nope" });
      }
      const payload = EXPLANATIONS[id];
      if (!payload) return this.json({ detail: "unknown requirement id" }, 404);
      return this.json({ ...payload, config_hash: this.hash });
    }

    if (path === "/api/metrics") return this.json(this.metricsPayload());

    if (path === "/api/analysis/word-sets") {
      return this.json({ ...WORD_SETS, config_hash: this.hash });
    }

    if (path === "/api/feedback/removed-words" || path === "/api/retrain") {
      const body = JSON.parse(String(init?.body ?? "{}"));
      this.receivedHashes.push(body.config_hash);
      if (body.config_hash !== this.hash) {
        return this.json({ detail: { error: "stale config hash", config_hash: this.hash } }, 409);
      }
      if (this.feedbackDelayMs) {
        await new Promise((resolve) => setTimeout(resolve, this.feedbackDelayMs));
      }
      if (path === "/api/feedback/removed-words") {
        const invalid = [...body.add, ...body.remove].find((w: string) => !/^[a-z]+$/.test(w));
        if (invalid) return this.json({ detail: `invalid stem ${invalid}` }, 422);
        this.customStems = [...new Set([...this.customStems, ...body.add])]
          .filter((w) => !body.remove.includes(w))
          .sort();
      } else {
        this.seed = body.seed;
      }
      this.version += 1;
      this.previous = this.current;
      this.current = RETRAINED_METRICS;
      return this.json({
        config_hash: this.hash,
        metrics: this.current,
        previous_metrics: this.previous,
        custom_stems: [...this.customStems],
        seed: this.seed,
      });
    }

    return this.json({ detail: "not found" }, 404);
  }
}

export function installFixture(service: FixtureService): void {
  globalThis.fetch = ((url: string | URL, init?: RequestInit) =>
    service.handle(String(url), init)) as typeof fetch;
}
