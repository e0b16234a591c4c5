import type { WireCylinder } from "./types.js";

// Client-side mirror of the server's refinement rule. The server stays
// authoritative; this exists so the submit button can go dark before a
// doomed request is ever composed.
//
// A later cylinder refines an earlier one when its horizon does not
// shrink and its membership pattern on [0, earlier.k] is unchanged.

export type RefinementProblem =
  | { kind: "horizon"; horizon: number; previous: number }
  | { kind: "locked"; position: number };

export function validateRefinement(
  earlier: WireCylinder,
  later: WireCylinder,
): RefinementProblem | null {
  if (later.k < earlier.k) {
    return { kind: "horizon", horizon: later.k, previous: earlier.k };
  }
  const a = earlier.members.filter((m) => m <= earlier.k);
  const b = later.members.filter((m) => m <= earlier.k);
  const shared = Math.min(a.length, b.length);
  for (let i = 0; i < shared; i++) {
    const x = a[i]!;
    const y = b[i]!;
    if (x !== y) {
      return { kind: "locked", position: Math.min(x, y) };
    }
  }
  if (a.length !== b.length) {
    const extra = a.length > b.length ? a[shared]! : b[shared]!;
    return { kind: "locked", position: extra };
  }
  return null;
}

export function describeProblem(problem: RefinementProblem): string {
  if (problem.kind === "horizon") {
    return `horizon ${problem.horizon} regresses below the locked horizon ${problem.previous}`;
  }
  return `position ${problem.position} is locked and cannot change`;
}
