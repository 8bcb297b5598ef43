// Feedback panel state machine: pending removal-list edits, the last-known
// config hash for optimistic concurrency, and a busy flag that serializes
// submits (the service has a single writer; the UI must not race it).

import { Metrics } from "./types.js";
import { StaleConfigError, postFeedback, postRetrain } from "./api.js";

export interface FeedbackResult {
  configHash: string;
  metrics: Metrics;
  previousMetrics: Metrics | null;
  customStems: string[];
}

export class FeedbackPanel {
  pendingAdd = new Set<string>();
  pendingRemove = new Set<string>();
  currentStems: string[] = [];
  lastKnownHash: string;
  busy = false;
  needsReload = false;

  constructor(configHash: string, currentStems: string[] = []) {
    this.lastKnownHash = configHash;
    this.currentStems = [...currentStems];
  }

  queueAdd(word: string): void {
    const w = word.trim().toLowerCase();
    if (!w) return;
    this.pendingRemove.delete(w);
    if (!this.currentStems.includes(w)) this.pendingAdd.add(w);
  }

  queueRemove(word: string): void {
    const w = word.trim().toLowerCase();
    if (!w) return;
    this.pendingAdd.delete(w);
    if (this.currentStems.includes(w)) this.pendingRemove.add(w);
  }

  clearPending(): void {
    this.pendingAdd.clear();
    this.pendingRemove.clear();
  }

  get hasPending(): boolean {
    return this.pendingAdd.size > 0 || this.pendingRemove.size > 0;
  }

  get submitEnabled(): boolean {
    return this.hasPending && !this.busy && !this.needsReload;
  }

  acceptServerState(configHash: string, customStems: string[]): void {
    this.lastKnownHash = configHash;
    this.currentStems = [...customStems];
    this.needsReload = false;
  }

  /** POST the pending edits; resolves with the refreshed metrics pair.
   * Throws if called while disabled. A 409 sets needsReload and keeps the
   * pending edits so nothing is silently lost. */
  async submit(): Promise<FeedbackResult> {
    if (!this.submitEnabled) {
      throw new Error("submit is disabled (no pending edits, busy, or reload required)");
    }
    this.busy = true;
    try {
      const response = await postFeedback(
        this.lastKnownHash,
        [...this.pendingAdd].sort(),
        [...this.pendingRemove].sort(),
      );
      this.acceptServerState(response.config_hash, response.custom_stems);
      this.clearPending();
      return {
        configHash: response.config_hash,
        metrics: response.metrics,
        previousMetrics: response.previous_metrics,
        customStems: response.custom_stems,
      };
    } catch (err) {
      if (err instanceof StaleConfigError) {
        this.needsReload = true;
      }
      throw err;
    } finally {
      this.busy = false;
    }
  }

  async retrain(seed: number): Promise<FeedbackResult> {
    if (this.busy || this.needsReload) {
      throw new Error("retrain blocked (busy or reload required)");
    }
    this.busy = true;
    try {
      const response = await postRetrain(this.lastKnownHash, seed);
      this.acceptServerState(response.config_hash, response.custom_stems ?? this.currentStems);
      return {
        configHash: response.config_hash,
        metrics: response.metrics,
        previousMetrics: response.previous_metrics,
        customStems: this.currentStems,
      };
    } catch (err) {
      if (err instanceof StaleConfigError) {
        this.needsReload = true;
      }
      throw err;
    } finally {
      this.busy = false;
    }
  }
}
