/**
 * What-if arithmetic over API responses.
 *
 * Deltas are differences between two AssessResponse score fields (candidate
 * minus pinned baseline); leverage highlights come straight from the API's
 * sensitivity map.  Nothing here re-derives a fuzzy score.
 */
import type { BaselineSnapshot } from "./state.js";
import type { AssessResponse, AssessmentKey, QuestionId } from "./types.js";

export const ASSESSMENT_KEYS: AssessmentKey[] = [
  "core_asset",
  "product_development",
  "management",
  "overall",
];

export interface WhatIfDeltas {
  /** candidate score minus baseline score, per assessment row */
  scores: Record<AssessmentKey, number>;
  /** candidate slider value minus baseline slider value, per question */
  answers: Record<QuestionId, number>;
}

export function computeDeltas(
  baseline: BaselineSnapshot,
  candidateAnswers: Record<QuestionId, number>,
  candidateResponse: AssessResponse,
): WhatIfDeltas {
  const scores = {} as Record<AssessmentKey, number>;
  for (const key of ASSESSMENT_KEYS) {
    scores[key] =
      candidateResponse.assessments[key].score - baseline.response.assessments[key].score;
  }
  const answers = {} as Record<QuestionId, number>;
  for (const id of Object.keys(baseline.answers) as QuestionId[]) {
    answers[id] = (candidateAnswers[id] ?? 0) - baseline.answers[id];
  }
  return { scores, answers };
}

/** Sensitivity below this is quadrature noise, not real leverage. */
export const LEVERAGE_EPSILON = 1e-6;

/**
 * Question ids with the largest positive sensitivity, best first.  Ties are
 * broken by questionnaire order; questions whose perturbation does not move
 * the overall score (beyond numerical noise) are never highlighted.
 */
export function topLeverage(
  sensitivity: Record<QuestionId, number>,
  count = 3,
): QuestionId[] {
  const order = Object.keys(sensitivity) as QuestionId[];
  return order
    .filter((id) => sensitivity[id] > LEVERAGE_EPSILON)
    .sort((a, b) => sensitivity[b] - sensitivity[a] || order.indexOf(a) - order.indexOf(b))
    .slice(0, count);
}
