import { describe, expect, it } from "vitest";

import {
  DEFAULT_ANSWER,
  acceptResponse,
  clampAnswer,
  clearBaseline,
  createSession,
  pinBaseline,
  setAnswer,
} from "../src/state.js";

import { SCHEMA, fakeResponse } from "./helpers.js";

describe("clampAnswer", () => {
  it("clamps into [0, 50]", () => {
    expect(clampAnswer(-3)).toBe(0);
    expect(clampAnswer(75)).toBe(50);
  });

  it("snaps to the 0.5 slider step", () => {
    expect(clampAnswer(12.3)).toBe(12.5);
    expect(clampAnswer(12.2)).toBe(12);
  });

  it("maps NaN to the minimum", () => {
    expect(clampAnswer(Number.NaN)).toBe(0);
  });
});

describe("session state", () => {
  it("initializes all 17 sliders at the default", () => {
    const state = createSession(SCHEMA);
    expect(Object.keys(state.answers)).toHaveLength(17);
    expect(state.answers.q17).toBe(DEFAULT_ANSWER);
  });

  it("setAnswer clamps and stores", () => {
    const state = createSession(SCHEMA);
    setAnswer(state, "q3", 200);
    expect(state.answers.q3).toBe(50);
  });

  it("rejects unknown question ids", () => {
    const state = createSession(SCHEMA);
    expect(() => setAnswer(state, "q99", 10)).toThrow(/unknown question id/);
  });

  it("ignores superseded responses", () => {
    const state = createSession(SCHEMA);
    acceptResponse(state, fakeResponse(20));
    acceptResponse(state, null);
    expect(state.lastResponse?.assessments.overall.score).toBe(20);
  });

  it("pins a baseline snapshot that later edits cannot mutate", () => {
    const state = createSession(SCHEMA);
    acceptResponse(state, fakeResponse(20));
    const baseline = pinBaseline(state);
    setAnswer(state, "q1", 50);
    expect(baseline.answers.q1).toBe(DEFAULT_ANSWER);
    clearBaseline(state);
    expect(state.baseline).toBeNull();
  });

  it("refuses to pin before the first response", () => {
    const state = createSession(SCHEMA);
    expect(() => pinBaseline(state)).toThrow(/before the first assessment/);
  });
});
