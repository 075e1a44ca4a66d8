/** Shared fixtures for the unit tests (no network). */
import type { AssessResponse, SchemaDocument } from "../src/types.js";

export const SCHEMA: SchemaDocument = {
  tool: "splpat",
  version: "0.1.0",
  questions: [
    ...[1, 2, 3, 4, 5].map((i) => ({
      id: `q${i}` as const,
      activity: "core_asset" as const,
      text: `core ${i}`,
    })),
    ...[6, 7, 8, 9, 10].map((i) => ({
      id: `q${i}` as const,
      activity: "product_development" as const,
      text: `pd ${i}`,
    })),
    ...[11, 12, 13, 14, 15, 16, 17].map((i) => ({
      id: `q${i}` as const,
      activity: "management" as const,
      text: `mgmt ${i}`,
    })),
  ],
};

export function fakeResponse(overallScore: number): AssessResponse {
  const record = (title: string, score: number) => ({
    title,
    score,
    score_display: score.toFixed(2),
    terms: ["Defined"],
    levels: [3],
    label: "Defined",
    level_label: "3",
  });
  return {
    tool: "splpat",
    version: "0.1.0",
    organization: "test",
    assessments: {
      core_asset: record("Core Asset Development Assessment", 30),
      product_development: record("Product Development Process Assessment", 30),
      management: record("Management Process Assessment", 30),
      overall: record("Software Product Line Process Assessment", overallScore),
    },
    baseline: { ...record("baseline", 30), method: "statistical_average" },
    declared_cmm: null,
    agreement: null,
    trace: { groups: {} },
    sensitivity: { delta: 10, overall_delta: { q1: 0 } },
  };
}
