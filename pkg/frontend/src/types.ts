/** Wire types for the two API endpoints the console consumes. */

export type QuestionId = `q${number}`;

export type ActivityKey = "core_asset" | "product_development" | "management";
export type AssessmentKey = ActivityKey | "overall";

export interface SchemaQuestion {
  id: QuestionId;
  activity: ActivityKey;
  text: string;
}

export interface SchemaDocument {
  tool: string;
  version: string;
  questions: SchemaQuestion[];
}

export interface AssessmentRecord {
  title: string;
  score: number;
  score_display: string;
  terms: string[];
  levels: number[];
  label: string;
  level_label: string;
}

export interface TraceLeaf {
  ref: string;
  value: number;
}

export interface TraceNode {
  id: string;
  stage: number;
  left: string;
  right: string;
  left_value: number;
  right_value: number;
  rule_strengths: number[];
  clip_levels: Record<string, number>;
  output: number;
}

export interface TraceGroup {
  leaves: TraceLeaf[];
  nodes: TraceNode[];
  output: number;
}

export interface AssessResponse {
  tool: string;
  version: string;
  organization: string;
  assessments: Record<AssessmentKey, AssessmentRecord>;
  baseline: AssessmentRecord & { method: string };
  declared_cmm: number | null;
  agreement: Record<string, boolean> | null;
  trace: { groups: Record<string, TraceGroup> };
  sensitivity: { delta: number; overall_delta: Record<QuestionId, number> };
}

export interface AssessRequest {
  organization?: string;
  declared_cmm?: number;
  answers: Record<QuestionId, number>;
  sensitivity_delta?: number;
}

export interface ApiValidationError {
  error: string;
  detail: string;
  problems?: string[];
}
