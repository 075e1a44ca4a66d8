/**
 * Session state: current slider values, the latest completed API response,
 * and an optional pinned baseline snapshot for what-if exploration.
 *
 * The console performs no fuzzy computation: every displayed score comes
 * from an AssessResponse; this module only bookkeeps inputs and snapshots.
 */
import type { AssessResponse, QuestionId, SchemaDocument } from "./types.js";

export const SLIDER_MIN = 0;
export const SLIDER_MAX = 50;
export const SLIDER_STEP = 0.5;
export const DEFAULT_ANSWER = 25;

export interface BaselineSnapshot {
  answers: Record<QuestionId, number>;
  response: AssessResponse;
}

export interface SessionState {
  answers: Record<QuestionId, number>;
  lastResponse: AssessResponse | null;
  baseline: BaselineSnapshot | null;
}

export function initialAnswers(
  schema: SchemaDocument,
  fill: number = DEFAULT_ANSWER,
): Record<QuestionId, number> {
  const answers: Record<QuestionId, number> = {};
  for (const question of schema.questions) {
    answers[question.id] = clampAnswer(fill);
  }
  return answers;
}

export function createSession(schema: SchemaDocument): SessionState {
  return { answers: initialAnswers(schema), lastResponse: null, baseline: null };
}

/** Clamp to the slider range and snap to its 0.5 step. */
export function clampAnswer(value: number): number {
  if (Number.isNaN(value)) {
    return SLIDER_MIN;
  }
  const clamped = Math.min(SLIDER_MAX, Math.max(SLIDER_MIN, value));
  return Math.round(clamped / SLIDER_STEP) * SLIDER_STEP;
}

export function setAnswer(state: SessionState, id: QuestionId, value: number): void {
  if (!(id in state.answers)) {
    throw new Error(`unknown question id ${id}`);
  }
  state.answers[id] = clampAnswer(value);
}

/** Record a completed assess call; ignores superseded (null) results. */
export function acceptResponse(state: SessionState, response: AssessResponse | null): void {
  if (response !== null) {
    state.lastResponse = response;
  }
}

export function pinBaseline(state: SessionState): BaselineSnapshot {
  if (state.lastResponse === null) {
    throw new Error("cannot pin a baseline before the first assessment");
  }
  state.baseline = {
    answers: { ...state.answers },
    response: state.lastResponse,
  };
  return state.baseline;
}

export function clearBaseline(state: SessionState): void {
  state.baseline = null;
}
