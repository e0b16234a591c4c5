import { validateRefinement, type RefinementProblem } from "./refinement.js";
import type { WireCylinder } from "./types.js";

// Model behind the toggleable tape. Positions at or below the locked
// horizon are frozen; the user edits only the extension: how far the
// horizon grows and which new positions join the set.
export class TapeModel {
  private toggled = new Set<number>();
  private lockedSet: Set<number>;

  constructor(public locked: WireCylinder, public extension: number = 1) {
    this.lockedSet = new Set(locked.members);
  }

  get pendingK(): number {
    return this.locked.k + this.extension;
  }

  setExtension(extension: number) {
    this.extension = Math.max(1, Math.floor(extension));
    for (const pos of [...this.toggled]) {
      if (pos > this.pendingK) this.toggled.delete(pos);
    }
  }

  isLocked(position: number): boolean {
    return position <= this.locked.k;
  }

  isMember(position: number): boolean {
    return this.lockedSet.has(position) || this.toggled.has(position);
  }

  // Returns false without changing anything when the position is frozen.
  toggle(position: number): boolean {
    if (this.isLocked(position) || position > this.pendingK || position < 0) {
      return false;
    }
    if (this.toggled.has(position)) {
      this.toggled.delete(position);
    } else {
      this.toggled.add(position);
    }
    return true;
  }

  composed(): WireCylinder {
    const members = [...this.locked.members, ...this.toggled].sort((p, q) => p - q);
    return { k: this.pendingK, members };
  }

  problem(): RefinementProblem | null {
    return validateRefinement(this.locked, this.composed());
  }
}
