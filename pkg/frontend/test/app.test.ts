import { beforeEach, describe, expect, it } from "vitest";

import { createApp, type App } from "../src/app.js";
import { TapeModel } from "../src/tape.js";
import { FixtureApi, loadFixtures, type Fixtures } from "./fixture_api.js";

// Scripted browser session: three strategy-A rounds recorded from the real
// service, replayed through the DOM. Covers the audit panel, the locked
// tape, client-side pre-validation, and both server error surfaces.

let fx: Fixtures;
let api: FixtureApi;
let app: App;
let root: HTMLElement;

function input(id: string, value: string) {
  const el = root.querySelector<HTMLInputElement>(`#${id}`)!;
  el.value = value;
  el.dispatchEvent(new Event("input", { bubbles: true }));
}

function cell(pos: number): HTMLButtonElement {
  return root.querySelector<HTMLButtonElement>(`button.cell[data-pos="${pos}"]`)!;
}

async function createWorkedSession() {
  input("setup-h", "2");
  input("setup-g", "1");
  input("setup-k", "1");
  input("setup-members", "0");
  root
    .querySelector<HTMLFormElement>("#setup-form")!
    .dispatchEvent(new Event("submit", { cancelable: true }));
  await app.lastOperation;
}

async function playScriptedRounds() {
  await createWorkedSession();
  input("extension", "4"); // 16 -> 20
  root.querySelector<HTMLButtonElement>("#submit")!.click();
  await app.lastOperation;
  input("extension", "10"); // 132 -> 142, with one toggle above the lock
  cell(140).click();
  await app.submitPending();
  input("extension", "8"); // 740 -> 748
  await app.submitPending();
}

beforeEach(() => {
  document.body.innerHTML = '<div id="app"></div>';
  root = document.getElementById("app")!;
  fx = loadFixtures();
  api = new FixtureApi(fx);
  app = createApp(root, api);
});

describe("session creation", () => {
  it("renders the worked-example response and freezes the setup form", async () => {
    await createWorkedSession();

    expect(app.sessionId).toBe(fx.create_response.session_id);
    expect(root.querySelector("#status")!.textContent).toContain("awaiting player1");
    expect(
      root.querySelector<HTMLFieldSetElement>("#setup-fields")!.disabled,
    ).toBe(true);

    const rounds = root.querySelectorAll("#timeline .round");
    expect(rounds).toHaveLength(1);
    expect(rounds[0]!.textContent).toContain("round 0: I locked k=1");
    expect(rounds[0]!.textContent).toContain("gap (1, 5) excluded");
    expect(rounds[0]!.textContent).toContain("block [5, 16]");
    expect(rounds[0]!.textContent).toContain("horizon 16");

    // Tape: {0} u [5,16] locked, gap 2..4 marked excluded, one editable cell.
    expect(cell(0).classList.contains("member")).toBe(true);
    expect(cell(0).disabled).toBe(true);
    for (const pos of [2, 3, 4]) {
      expect(cell(pos).classList.contains("excluded")).toBe(true);
      expect(cell(pos).classList.contains("member")).toBe(false);
    }
    for (let pos = 5; pos <= 16; pos++) {
      expect(cell(pos).classList.contains("member")).toBe(true);
      expect(cell(pos).disabled).toBe(true);
    }
    expect(cell(17).disabled).toBe(false);
  });

  it("draws the audit row and the chart marker for round 0", async () => {
    await createWorkedSession();

    const row = root.querySelector(".audit-row")!;
    expect(row.classList.contains("pass")).toBe(true);
    expect(row.textContent).toContain("r(4) = 0");
    expect(row.textContent).toContain("r(16) = 5");
    expect(row.textContent).toContain("≥ 4");

    const marker = root.querySelector<HTMLElement>('.marker[data-x="16"]')!;
    expect(marker.dataset.count).toBe("5");
    expect(marker.dataset.threshold).toBe("4");
    expect(marker.classList.contains("meets")).toBe(true);
    const line = root.querySelector<HTMLElement>(".threshold-line")!;
    expect(Number.parseFloat(marker.style.height)).toBeGreaterThanOrEqual(
      Number.parseFloat(line.style.bottom),
    );
  });
});

describe("three scripted rounds", () => {
  it("plays them and renders every audit row as passing", async () => {
    await playScriptedRounds();

    expect(api.movesServed).toBe(3);
    expect(app.roundIndex).toBe(4);

    const rounds = root.querySelectorAll("#timeline .round");
    expect(rounds).toHaveLength(4);
    expect(rounds[1]!.textContent).toContain("block [43, 132]");
    expect(rounds[2]!.textContent).toContain("block [287, 740]");
    expect(rounds[3]!.textContent).toContain("block [1499, 3468]");

    const auditRows = root.querySelectorAll(".audit-row");
    expect(auditRows).toHaveLength(4);
    for (const row of auditRows) {
      expect(row.classList.contains("pass")).toBe(true);
      expect(row.classList.contains("fail")).toBe(false);
    }

    // The toggled position traveled with the move and is locked now.
    expect(cell(140).classList.contains("member")).toBe(true);
    expect(cell(140).disabled).toBe(true);

    // Chart markers for every t_m, all meeting their thresholds.
    for (const t of [16, 132, 740, 3468]) {
      const marker = root.querySelector<HTMLElement>(`.marker[data-x="${t}"]`)!;
      expect(marker).not.toBeNull();
      expect(marker.classList.contains("meets")).toBe(true);
    }
  });

  it("refuses an illegal toggle below the locked horizon", async () => {
    await playScriptedRounds();

    const locked = cell(7);
    expect(locked.disabled).toBe(true);
    const before = app.tape!.composed();
    locked.click(); // disabled button: no handler fires
    expect(app.tape!.toggle(7)).toBe(false); // model refuses even a direct call
    expect(app.tape!.composed()).toEqual(before);
    expect(app.tape!.problem()).toBeNull();
    expect(root.querySelector<HTMLButtonElement>("#submit")!.disabled).toBe(false);
  });

  it("renders the server 400 inline when pre-validation is bypassed", async () => {
    await playScriptedRounds();

    // Simulate a buggy client that slips a locked-position edit past the
    // mirror: the server answer must still land on the offending cell.
    const bad = fx.violating_move.request.move;
    app.tape!.composed = () => bad;
    app.tape!.problem = () => null;
    await app.submitPending();

    const box = root.querySelector<HTMLElement>("#server-error")!;
    expect(box.hidden).toBe(false);
    expect(box.textContent).toContain("refinement_violation");
    expect(box.textContent).toContain("400");
    expect(cell(fx.violating_move.detail.position!).classList.contains("error")).toBe(true);
    expect(app.roundIndex).toBe(4); // nothing advanced
  });

  it("surfaces an out-of-turn 409 inline", async () => {
    await playScriptedRounds();

    app.tape = new TapeModel(fx.moves[2]!.response.response, 5);
    await app.submitPending(); // script exhausted -> FixtureApi races us

    const box = root.querySelector<HTMLElement>("#server-error")!;
    expect(box.hidden).toBe(false);
    expect(box.textContent).toContain("out_of_turn (409)");
    expect(box.textContent).toContain(`round_index ${fx.stale_move.detail.expected}`);
    expect(root.querySelectorAll("#timeline .round")).toHaveLength(4);
  });
});
