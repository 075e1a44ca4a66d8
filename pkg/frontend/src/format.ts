/** Small display helpers; numbers always come from API display fields. */
import type { AssessmentRecord, TraceGroup } from "./types.js";

export function levelBadge(record: AssessmentRecord): string {
  return `${record.label} (${record.level_label})`;
}

/** Bar width in percent for a 0-50 score. */
export function barPercent(score: number): number {
  return Math.min(100, Math.max(0, (score / 50) * 100));
}

export function formatDelta(delta: number): string {
  if (Math.abs(delta) < 5e-3) {
    return "±0.00";
  }
  return `${delta > 0 ? "+" : "−"}${Math.abs(delta).toFixed(2)}`;
}

/** Indented text rendering of one reduction tree (for the trace panel). */
export function traceGroupText(title: string, group: TraceGroup): string {
  const byId = new Map(group.nodes.map((node) => [node.id, node]));
  const leafValues = new Map(group.leaves.map((leaf) => [leaf.ref, leaf.value]));
  const rootRef = group.nodes.length
    ? group.nodes[group.nodes.length - 1].id
    : group.leaves[0].ref;

  const walk = (ref: string, depth: number): string[] => {
    const pad = "  ".repeat(depth);
    const node = byId.get(ref);
    if (node === undefined) {
      return [`${pad}${ref} = ${leafValues.get(ref)?.toFixed(2) ?? "?"}`];
    }
    return [
      `${pad}${node.id}: combine(${node.left_value.toFixed(2)}, ` +
        `${node.right_value.toFixed(2)}) -> ${node.output.toFixed(2)}`,
      ...walk(node.left, depth + 1),
      ...walk(node.right, depth + 1),
    ];
  };

  return [`${title} = ${group.output.toFixed(2)}`, ...walk(rootRef, 1)].join("\n");
}
