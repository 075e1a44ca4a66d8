/**
 * Assessment console: sliders in, API-computed maturity out.
 *
 * Layout: three collapsible activity sections of sliders, one live result
 * sidebar (scores, level badges, bars), a cascade-trace panel and a what-if
 * drawer working against a pinned baseline.
 */
import { ApiClient, ApiError, debounce } from "./api.js";
import { barPercent, formatDelta, levelBadge, traceGroupText } from "./format.js";
import {
  SLIDER_MAX,
  SLIDER_MIN,
  SLIDER_STEP,
  createSession,
  acceptResponse,
  pinBaseline,
  setAnswer,
  type SessionState,
} from "./state.js";
import { ASSESSMENT_KEYS, computeDeltas, topLeverage } from "./whatif.js";
import type {
  ActivityKey,
  AssessResponse,
  QuestionId,
  SchemaDocument,
  SchemaQuestion,
} from "./types.js";

const ACTIVITY_LABELS: Record<ActivityKey, string> = {
  core_asset: "Core Asset Development",
  product_development: "Product Development",
  management: "Management",
};

const TRACE_TITLES: Record<string, string> = {
  ...ACTIVITY_LABELS,
  overall: "Overall",
};

const api = new ApiClient();

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) {
    node.className = className;
  }
  if (text !== undefined) {
    node.textContent = text;
  }
  return node;
}

function byId<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (node === null) {
    throw new Error(`missing element #${id}`);
  }
  return node as T;
}

function buildSliderRow(
  question: SchemaQuestion,
  state: SessionState,
  onChange: () => void,
): HTMLElement {
  const row = el("div", "question-row");
  row.id = `row-${question.id}`;

  const label = el("label", "question-label");
  label.htmlFor = `slider-${question.id}`;
  label.append(el("span", "question-id", question.id), el("span", "question-text", question.text));

  const controls = el("div", "question-controls");
  const slider = el("input") as HTMLInputElement;
  slider.type = "range";
  slider.id = `slider-${question.id}`;
  slider.min = String(SLIDER_MIN);
  slider.max = String(SLIDER_MAX);
  slider.step = String(SLIDER_STEP);
  slider.value = String(state.answers[question.id]);

  const readout = el("output", "question-value", slider.value);
  slider.addEventListener("input", () => {
    setAnswer(state, question.id, Number(slider.value));
    slider.value = String(state.answers[question.id]);
    readout.textContent = slider.value;
    onChange();
  });

  const error = el("div", "question-error");
  error.id = `error-${question.id}`;

  controls.append(slider, readout);
  row.append(label, controls, error);
  return row;
}

function buildForm(schema: SchemaDocument, state: SessionState, onChange: () => void): void {
  const form = byId<HTMLDivElement>("questionnaire");
  form.textContent = "";
  for (const activity of Object.keys(ACTIVITY_LABELS) as ActivityKey[]) {
    const section = el("details", "activity-section") as HTMLDetailsElement;
    section.open = true;
    const summary = el("summary", "activity-title", ACTIVITY_LABELS[activity]);
    section.append(summary);
    for (const question of schema.questions.filter((q) => q.activity === activity)) {
      section.append(buildSliderRow(question, state, onChange));
    }
    form.append(section);
  }
}

function clearInlineErrors(): void {
  for (const node of document.querySelectorAll(".question-error")) {
    node.textContent = "";
  }
  byId<HTMLDivElement>("global-error").textContent = "";
}

function showErrors(error: unknown): void {
  clearInlineErrors();
  if (error instanceof ApiError && error.problems.length > 0) {
    for (const problem of error.problems) {
      const [field, ...rest] = problem.split(":");
      const slot = document.getElementById(`error-${field.trim()}`);
      if (slot !== null) {
        slot.textContent = rest.join(":").trim();
      } else {
        byId<HTMLDivElement>("global-error").textContent = problem;
      }
    }
    return;
  }
  byId<HTMLDivElement>("global-error").textContent =
    error instanceof Error ? error.message : String(error);
}

function renderResults(response: AssessResponse): void {
  const panel = byId<HTMLDivElement>("results");
  panel.textContent = "";
  for (const key of ASSESSMENT_KEYS) {
    const record = response.assessments[key];
    const card = el("div", key === "overall" ? "result-card overall" : "result-card");
    card.append(el("div", "result-title", record.title));
    const scoreLine = el("div", "result-score-line");
    scoreLine.append(
      el("span", "result-score", record.score_display),
      el("span", "result-badge", levelBadge(record)),
    );
    card.append(scoreLine);
    const bar = el("div", "result-bar");
    const fill = el("div", "result-bar-fill");
    fill.style.width = `${barPercent(record.score)}%`;
    bar.append(fill);
    card.append(bar);
    panel.append(card);
  }
  const baseline = response.baseline;
  panel.append(
    el(
      "div",
      "result-baseline",
      `Statistical average: ${baseline.score_display} — ${levelBadge(baseline)}`,
    ),
  );

  const trace = byId<HTMLPreElement>("trace-text");
  trace.textContent = Object.entries(response.trace.groups)
    .map(([name, group]) => traceGroupText(TRACE_TITLES[name] ?? name, group))
    .join("\n\n");
}

function renderWhatIf(state: SessionState): void {
  const drawer = byId<HTMLDivElement>("whatif-body");
  drawer.textContent = "";
  if (state.baseline === null || state.lastResponse === null) {
    drawer.append(
      el("p", "hint", "Pin the current result as a baseline, then move sliders to compare."),
    );
    return;
  }
  const deltas = computeDeltas(state.baseline, state.answers, state.lastResponse);

  const list = el("dl", "delta-list");
  for (const key of ASSESSMENT_KEYS) {
    list.append(
      el("dt", undefined, state.lastResponse.assessments[key].title),
      el("dd", deltaClass(deltas.scores[key]), formatDelta(deltas.scores[key])),
    );
  }
  drawer.append(list);

  const moved = (Object.entries(deltas.answers) as [QuestionId, number][]).filter(
    ([, d]) => d !== 0,
  );
  drawer.append(
    el(
      "p",
      "hint",
      moved.length === 0
        ? "Candidate equals the pinned baseline."
        : `Changed answers: ${moved.map(([id, d]) => `${id} ${formatDelta(d)}`).join(", ")}`,
    ),
  );

  const leverage = topLeverage(state.baseline.response.sensitivity.overall_delta);
  const chips = el("div", "leverage");
  chips.append(el("span", "hint", "Highest leverage (from baseline sensitivity): "));
  if (leverage.length === 0) {
    chips.append(el("span", "chip", "none — overall is saturated"));
  }
  for (const id of leverage) {
    chips.append(el("span", "chip", id));
  }
  drawer.append(chips);

  for (const row of document.querySelectorAll(".question-row")) {
    row.classList.toggle("leverage-highlight", leverage.includes(row.id.slice(4) as QuestionId));
  }
}

function deltaClass(delta: number): string {
  if (delta > 5e-3) return "delta positive";
  if (delta < -5e-3) return "delta negative";
  return "delta";
}

async function runAssess(state: SessionState): Promise<void> {
  const organization = byId<HTMLInputElement>("organization").value || "console session";
  try {
    const response = await api.assess({
      organization,
      answers: { ...state.answers },
    });
    if (response === null) {
      return; // superseded by a newer request
    }
    acceptResponse(state, response);
    clearInlineErrors();
    renderResults(response);
    renderWhatIf(state);
  } catch (error) {
    showErrors(error);
  }
}

async function start(): Promise<void> {
  let schema: SchemaDocument;
  try {
    schema = await api.getSchema();
  } catch (error) {
    byId<HTMLDivElement>("global-error").textContent =
      `Cannot load the questionnaire: ${error instanceof Error ? error.message : error}`;
    return;
  }
  const state = createSession(schema);
  const scheduleAssess = debounce(() => void runAssess(state), 150);
  buildForm(schema, state, scheduleAssess);

  byId<HTMLButtonElement>("pin-baseline").addEventListener("click", () => {
    if (state.lastResponse === null) {
      return;
    }
    pinBaseline(state);
    byId<HTMLSpanElement>("baseline-label").textContent =
      `pinned at overall ${state.baseline!.response.assessments.overall.score_display}`;
    renderWhatIf(state);
  });

  await runAssess(state);
}

void start();
