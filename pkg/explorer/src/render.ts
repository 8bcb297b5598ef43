// Pure HTML-string renderers. Every number shown comes from the service
// payload; rendering the same payload twice yields byte-identical markup.

import {
  ExplanationPayload,
  MetricsPayload,
  Metrics,
  RequirementsPage,
  WordSetsPayload,
} from "./types.js";

export type Palette = "default" | "colorblind";

const METRIC_KEYS: (keyof Metrics)[] = ["accuracy", "precision", "recall", "f1"];

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function paletteClass(palette: Palette): string {
  return palette === "colorblind" ? " palette-alt" : "";
}

// Display-only heuristic pairing a text token with a reported stem: the stem
// is a prefix of the token with 'i' and 'y' treated as equal (covers the
// stemmer's y -> i rewrite, e.g. "displayed" vs "displai").
export function stemMatchesToken(stem: string, token: string): boolean {
  const t = token.toLowerCase();
  if (stem.length > t.length) return false;
  for (let i = 0; i < stem.length; i++) {
    const a = stem[i];
    const b = t[i];
    if (a !== b && !((a === "i" || a === "y") && (b === "i" || b === "y"))) return false;
  }
  return true;
}

export function highlightText(
  text: string,
  supportive: string[],
  distractive: string[],
): string {
  const pieces = text.split(/([A-Za-z]+)/);
  return pieces
    .map((piece) => {
      if (!/^[A-Za-z]+$/.test(piece)) return escapeHtml(piece);
      if (supportive.some((s) => stemMatchesToken(s, piece))) {
        return `<mark class="hl-supportive">${escapeHtml(piece)}</mark>`;
      }
      if (distractive.some((s) => stemMatchesToken(s, piece))) {
        return `<mark class="hl-distractive">${escapeHtml(piece)}</mark>`;
      }
      return escapeHtml(piece);
    })
    .join("");
}

export function renderExplanation(payload: ExplanationPayload, palette: Palette = "default"): string {
  const words = payload.words
    .filter((w) => w.weight !== 0)
    .slice()
    .sort((a, b) => Math.abs(b.weight) - Math.abs(a.weight) || a.stem.localeCompare(b.stem));
  const probability = payload.prob_nfr.toFixed(2);
  const supportive = words.filter((w) => w.weight > 0).map((w) => w.stem);
  const distractive = words.filter((w) => w.weight < 0).map((w) => w.stem);

  const header =
    `<div class="prob-readout">P(NFR) = <strong>${probability}</strong>` +
    ` <span class="prob-class">${payload.prob_nfr >= 0.5 ? "NFR" : "FR"}</span></div>`;

  const textBlock =
    payload.text !== undefined
      ? `<p class="req-text">${highlightText(payload.text, supportive, distractive)}</p>`
      : "";

  let barsBlock: string;
  if (words.length === 0) {
    barsBlock = `<p class="empty-note">No weighted words reported for this requirement.</p>`;
  } else {
    const maxAbs = Math.abs(words[0].weight);
    const bars = words
      .map((w) => {
        const width = ((Math.abs(w.weight) / maxAbs) * 100).toFixed(1);
        const side = w.weight > 0 ? "supportive" : "distractive";
        return (
          `<div class="bar-row">` +
          `<span class="bar-label">${escapeHtml(w.stem)}</span>` +
          `<span class="bar bar-${side}" style="width:${width}%"></span>` +
          `<span class="bar-value">${w.weight.toFixed(4)}</span>` +
          `</div>`
        );
      })
      .join("");
    barsBlock = `<div class="bar-chart">${bars}</div>`;
  }
  return `<section class="explanation${paletteClass(palette)}">${header}${textBlock}${barsBlock}</section>`;
}

function formatDelta(after: number, before: number): string {
  const delta = after - before;
  const sign = delta >= 0 ? "+" : "";
  return `${sign}${delta.toFixed(4)}`;
}

export function renderMetricsPanel(payload: MetricsPayload): string {
  const { current, previous } = payload;
  const rows = METRIC_KEYS.map((key) => {
    const now = current[key].toFixed(4);
    if (previous === null) {
      return `<tr><th>${key}</th><td>-</td><td>${now}</td><td>-</td></tr>`;
    }
    const before = previous[key].toFixed(4);
    return (
      `<tr><th>${key}</th><td>${before}</td><td>${now}</td>` +
      `<td class="delta">${formatDelta(current[key], previous[key])}</td></tr>`
    );
  }).join("");
  return (
    `<table class="metrics-table">` +
    `<thead><tr><th>metric</th><th>before</th><th>after</th><th>delta</th></tr></thead>` +
    `<tbody>${rows}</tbody></table>`
  );
}

function percentageBars(top30: { stem: string; percentage: number }[], side: string): string {
  const shown = top30.slice(0, 30);
  if (shown.length === 0) return `<p class="empty-note">No ${side} words yet.</p>`;
  const maxPct = Math.max(...shown.map((w) => w.percentage));
  const bars = shown
    .map(
      (w) =>
        `<div class="bar-row">` +
        `<span class="bar-label">${escapeHtml(w.stem)}</span>` +
        `<span class="bar bar-${side}" style="width:${((w.percentage / maxPct) * 100).toFixed(1)}%"></span>` +
        `<span class="bar-value">${w.percentage.toFixed(2)}%</span>` +
        `</div>`,
    )
    .join("");
  return `<div class="bar-chart">${bars}</div>`;
}

export function renderWordSetDashboard(payload: WordSetsPayload, palette: Palette = "default"): string {
  const panel = (name: string, title: string, stems: string[]) => {
    const body =
      stems.length === 0
        ? `<p class="empty-note">empty</p>`
        : `<ul class="stem-list">${stems.map((s) => `<li>${escapeHtml(s)}</li>`).join("")}</ul>`;
    return `<div class="set-panel set-${name}"><h3>${title}</h3>${body}</div>`;
  };
  const sets =
    panel("A", "A: distractive only", payload.sets.A) +
    panel("B", "B: supportive only", payload.sets.B) +
    panel("C", "C: common", payload.sets.C);

  const subclassRows = Object.entries(payload.subclasses)
    .map(([stem, code]) => `<tr><td>${escapeHtml(stem)}</td><td>${escapeHtml(code)}</td></tr>`)
    .join("");
  const subclassTable =
    `<table class="subclass-table"><thead><tr><th>word</th><th>NFR class</th></tr></thead>` +
    `<tbody>${subclassRows}</tbody></table>`;

  return (
    `<section class="word-sets${paletteClass(palette)}">` +
    `<div class="set-panels">${sets}</div>` +
    `<div class="top30"><h3>Top supportive words</h3>${percentageBars(payload.supportive.top30, "supportive")}</div>` +
    `<div class="top30"><h3>Top distractive words</h3>${percentageBars(payload.distractive.top30, "distractive")}</div>` +
    `<div class="subclasses"><h3>NFR subclass keywords</h3>${subclassTable}</div>` +
    `</section>`
  );
}

export function renderRequirementList(page: RequirementsPage): string {
  const rows = page.items
    .map(
      (r) =>
        `<tr data-id="${r.id}" class="req-row${r.in_test ? " in-test" : ""}">` +
        `<td>${r.id}</td>` +
        `<td class="req-cell">${escapeHtml(r.text)}</td>` +
        `<td>${escapeHtml(r.raw_label)}</td>` +
        `<td class="pred pred-${r.predicted_label.toLowerCase()}">${escapeHtml(r.predicted_label)}</td>` +
        `<td>${r.prob_nfr.toFixed(2)}</td>` +
        `</tr>`,
    )
    .join("");
  return (
    `<table class="req-table">` +
    `<thead><tr><th>id</th><th>requirement</th><th>label</th><th>predicted</th><th>P(NFR)</th></tr></thead>` +
    `<tbody>${rows}</tbody></table>`
  );
}

export function renderErrorPanel(message: string): string {
  return `<div class="error-panel">${escapeHtml(message)}</div>`;
}
