// DOM wiring: fetch -> render -> innerHTML. All presentation logic lives in
// render.ts so it stays testable without a browser.

import {
  fetchExplanation,
  fetchMetrics,
  fetchRequirements,
  fetchWordSets,
  StaleConfigError,
} from "./api.js";
import {
  Palette,
  renderErrorPanel,
  renderExplanation,
  renderMetricsPanel,
  renderRequirementList,
  renderWordSetDashboard,
} from "./render.js";
import { FeedbackPanel } from "./state.js";
import { SchemaError } from "./types.js";

let palette: Palette = "default";
let panel: FeedbackPanel | null = null;

function el(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node;
}

function showError(target: HTMLElement, err: unknown): void {
  const message =
    err instanceof SchemaError
      ? `Schema mismatch: ${err.message}`
      : err instanceof StaleConfigError
        ? "The session configuration changed elsewhere; reload the page."
        : `Request failed: ${String(err)}`;
  target.innerHTML = renderErrorPanel(message);
}

async function loadRequirements(page: number): Promise<void> {
  const target = el("requirements");
  try {
    const data = await fetchRequirements(page, 25);
    target.innerHTML = renderRequirementList(data);
    el("page-label").textContent = `page ${data.page} of ${Math.ceil(data.total / data.page_size)}`;
    for (const row of target.querySelectorAll<HTMLTableRowElement>("tr.req-row")) {
      row.addEventListener("click", () => loadExplanation(Number(row.dataset.id)));
    }
  } catch (err) {
    showError(target, err);
  }
}

async function loadExplanation(id: number): Promise<void> {
  const target = el("explanation");
  target.innerHTML = `<p class="empty-note">computing explanation for #${id}...</p>`;
  try {
    const payload = await fetchExplanation(id);
    target.innerHTML = renderExplanation(payload, palette);
  } catch (err) {
    showError(target, err);
  }
}

async function loadMetrics(): Promise<void> {
  const target = el("metrics");
  try {
    const payload = await fetchMetrics();
    target.innerHTML = renderMetricsPanel(payload);
    if (panel === null) {
      panel = new FeedbackPanel(payload.config_hash, payload.profile.custom_stems);
    } else {
      panel.acceptServerState(payload.config_hash, payload.profile.custom_stems);
    }
    el("removed-current").textContent =
      payload.profile.custom_stems.join(", ") || "(none)";
    refreshFeedbackControls();
  } catch (err) {
    showError(target, err);
  }
}

async function loadWordSets(): Promise<void> {
  const target = el("word-sets");
  target.innerHTML = `<p class="empty-note">aggregating explanations over the test split...</p>`;
  try {
    const payload = await fetchWordSets();
    target.innerHTML = renderWordSetDashboard(payload, palette);
  } catch (err) {
    showError(target, err);
  }
}

function refreshFeedbackControls(): void {
  if (!panel) return;
  const button = el("submit-feedback") as HTMLButtonElement;
  button.disabled = !panel.submitEnabled;
  el("pending-label").textContent = panel.hasPending
    ? `pending: +[${[...panel.pendingAdd].join(", ")}] -[${[...panel.pendingRemove].join(", ")}]`
    : "no pending edits";
  el("reload-note").hidden = !panel.needsReload;
}

async function submitFeedback(): Promise<void> {
  if (!panel || !panel.submitEnabled) return;
  refreshFeedbackControls();
  const target = el("metrics");
  try {
    const result = await panel.submit();
    target.innerHTML = renderMetricsPanel({
      config_hash: result.configHash,
      seed: 0,
      profile: { name: "custom", base: "A", removed_stems: [], custom_stems: result.customStems },
      current: result.metrics,
      previous: result.previousMetrics,
    });
    el("removed-current").textContent = result.customStems.join(", ") || "(none)";
    await loadWordSets();
    await loadRequirements(1);
  } catch (err) {
    showError(el("feedback-status"), err);
  } finally {
    refreshFeedbackControls();
  }
}

function wire(): void {
  el("add-word-form").addEventListener("submit", (event) => {
    event.preventDefault();
    const input = el("add-word") as HTMLInputElement;
    panel?.queueAdd(input.value);
    input.value = "";
    refreshFeedbackControls();
  });
  el("remove-word-form").addEventListener("submit", (event) => {
    event.preventDefault();
    const input = el("remove-word") as HTMLInputElement;
    panel?.queueRemove(input.value);
    input.value = "";
    refreshFeedbackControls();
  });
  el("submit-feedback").addEventListener("click", () => void submitFeedback());
  el("palette-toggle").addEventListener("change", (event) => {
    palette = (event.target as HTMLInputElement).checked ? "colorblind" : "default";
    document.body.classList.toggle("palette-alt", palette === "colorblind");
  });
  let page = 1;
  el("prev-page").addEventListener("click", () => {
    page = Math.max(1, page - 1);
    void loadRequirements(page);
  });
  el("next-page").addEventListener("click", () => {
    page += 1;
    void loadRequirements(page);
  });
}

async function boot(): Promise<void> {
  wire();
  await loadMetrics();
  await loadRequirements(1);
  await loadWordSets();
}

void boot();
