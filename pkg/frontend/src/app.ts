import { ApiError, type Api } from "./api.js";
import { renderChart, type ChartMark } from "./chart.js";
import { describeProblem } from "./refinement.js";
import { TapeModel } from "./tape.js";
import {
  checkPasses,
  isCheckA,
  type AuditReport,
  type CreateRequest,
  type GrowthSpec,
  type PrefixView,
  type RoundData,
  type RoundResponse,
  type Strategy,
  type WireCylinder,
} from "./types.js";

interface RoundEntry {
  player1: WireCylinder;
  data: RoundData;
  response: WireCylinder;
}

// One session per page. The strategy, h, g and growth preset are fixed at
// creation; afterwards the user only composes Player I moves. Every number
// that arrives as a decimal string is rendered verbatim.
export class App {
  sessionId: string | null = null;
  roundIndex = 0; // turn token: must match the server's completed-round count
  awaiting = "";
  strategy: Strategy = "A";
  rounds: RoundEntry[] = [];
  audit: AuditReport | null = null;
  prefix: PrefixView | null = null;
  tape: TapeModel | null = null;
  busy = false;
  lastOperation: Promise<void> = Promise.resolve();

  private els: Record<string, HTMLElement> = {};

  constructor(private root: HTMLElement, private api: Api) {
    this.buildSkeleton();
  }

  private el<T extends HTMLElement = HTMLElement>(id: string): T {
    const found = this.els[id];
    if (!found) throw new Error(`missing element ${id}`);
    return found as T;
  }

  private buildSkeleton() {
    this.root.innerHTML = `
      <h1>sidonlab</h1>
      <form id="setup-form">
        <fieldset id="setup-fields">
          <label>strategy
            <select id="setup-strategy"><option>A</option><option>B</option></select>
          </label>
          <label>h <input id="setup-h" type="number" min="2" value="2"></label>
          <label>g <input id="setup-g" type="number" min="1" value="1"></label>
          <label>f
            <select id="setup-f"><option>sqrt</option><option>log</option></select>
          </label>
          <label>opening horizon <input id="setup-k" type="number" min="0" value="1"></label>
          <label>opening members <input id="setup-members" type="text" value="0"></label>
          <button id="setup-create" type="submit">create session</button>
        </fieldset>
      </form>
      <div id="status"></div>
      <div id="server-error" class="inline-error" hidden></div>
      <ol id="timeline"></ol>
      <div id="tape"></div>
      <div id="pending-editor" hidden>
        <label>extend horizon by
          <input id="extension" type="number" min="1" value="1">
        </label>
        <button id="submit" type="button">submit move</button>
        <span id="pending-problem" class="inline-error"></span>
      </div>
      <table id="audit"><tbody></tbody></table>
      <div id="chart-box"></div>
    `;
    for (const node of this.root.querySelectorAll<HTMLElement>("[id]")) {
      this.els[node.id] = node;
    }
    this.el<HTMLFormElement>("setup-form").addEventListener("submit", (ev) => {
      ev.preventDefault();
      this.lastOperation = this.createFromForm();
    });
    this.el<HTMLButtonElement>("submit").addEventListener("click", () => {
      this.lastOperation = this.submitPending();
    });
    this.el<HTMLInputElement>("extension").addEventListener("input", () => {
      const value = Number(this.el<HTMLInputElement>("extension").value);
      if (this.tape && Number.isFinite(value)) {
        this.tape.setExtension(value);
        this.renderTape();
        this.renderPendingState();
      }
    });
  }

  composeCreateRequest(): CreateRequest {
    const strategy = this.el<HTMLSelectElement>("setup-strategy").value as Strategy;
    const f: GrowthSpec | null =
      strategy === "A"
        ? { kind: this.el<HTMLSelectElement>("setup-f").value as "sqrt" | "log" }
        : null;
    const membersText = this.el<HTMLInputElement>("setup-members").value.trim();
    const members =
      membersText === ""
        ? []
        : membersText.split(",").map((tok) => Number.parseInt(tok.trim(), 10));
    return {
      params: {
        h: Number(this.el<HTMLInputElement>("setup-h").value),
        g: Number(this.el<HTMLInputElement>("setup-g").value),
      },
      strategy,
      f,
      opening: { k: Number(this.el<HTMLInputElement>("setup-k").value), members },
    };
  }

  async createFromForm(): Promise<void> {
    if (this.busy || this.sessionId !== null) return;
    const request = this.composeCreateRequest();
    this.busy = true;
    try {
      const response = await this.api.createSession(request);
      this.strategy = request.strategy;
      this.el<HTMLFieldSetElement>("setup-fields").disabled = true; // immutable now
      await this.applyResponse(response, request.opening);
    } catch (err) {
      this.showError(err);
    } finally {
      this.busy = false;
      this.renderPendingState();
    }
  }

  async submitPending(): Promise<void> {
    if (this.busy || !this.tape || !this.sessionId) return;
    const problem = this.tape.problem();
    if (problem !== null) return; // pre-validation: never send a doomed move
    const move = this.tape.composed();
    this.busy = true;
    this.renderPendingState();
    try {
      const response = await this.api.submitMove(this.sessionId, {
        round_index: this.roundIndex,
        move,
      });
      await this.applyResponse(response, move);
    } catch (err) {
      this.showError(err);
    } finally {
      this.busy = false;
      this.renderPendingState();
    }
  }

  private async applyResponse(response: RoundResponse, player1: WireCylinder): Promise<void> {
    this.sessionId = response.session_id;
    this.roundIndex = response.round_index;
    this.awaiting = response.awaiting;
    this.audit = response.audit;
    this.rounds.push({
      player1,
      data: response.round_data,
      response: response.response,
    });
    this.tape = new TapeModel(response.response);
    this.clearError();
    try {
      this.prefix = await this.api.fetchPrefix(response.session_id);
    } catch (err) {
      this.prefix = null;
      this.showError(err);
    }
    this.renderAll();
  }

  private showError(err: unknown) {
    const box = this.el("server-error");
    box.hidden = false;
    if (err instanceof ApiError) {
      const d = err.detail;
      let text = `${d.error} (${err.status}): ${d.message}`;
      if (d.error === "out_of_turn") {
        text = `out_of_turn (409): server expects round_index ${d.expected}, got ${d.got}; reload to resync`;
      }
      box.textContent = text;
      if (d.position !== undefined) {
        const cell = this.root.querySelector(`button.cell[data-pos="${d.position}"]`);
        cell?.classList.add("error");
      }
    } else {
      box.textContent = String(err);
    }
  }

  private clearError() {
    const box = this.el("server-error");
    box.hidden = true;
    box.textContent = "";
  }

  private renderAll() {
    this.renderStatus();
    this.renderTimeline();
    this.renderTape();
    this.renderPendingState();
    this.renderAudit();
    this.renderChartBox();
  }

  private renderStatus() {
    this.el("status").textContent = this.sessionId
      ? `session ${this.sessionId} · ${this.rounds.length} round(s) · awaiting ${this.awaiting}`
      : "";
  }

  private describeRound(entry: RoundEntry): string {
    if (this.strategy === "A") {
      return `gap (${entry.player1.k}, ${entry.data.x}) excluded, block [${entry.data.x}, ${entry.data.t}]`;
    }
    return `block (${entry.player1.k}, ${entry.data.y}]`;
  }

  private renderTimeline() {
    const list = this.el("timeline");
    list.textContent = "";
    this.rounds.forEach((entry, m) => {
      const item = document.createElement("li");
      item.className = "round";
      item.textContent =
        `round ${m}: I locked k=${entry.player1.k} → ` +
        `II ${this.describeRound(entry)}, horizon ${entry.response.k}`;
      list.appendChild(item);
    });
  }

  private renderTape() {
    const tapeEl = this.el("tape");
    tapeEl.textContent = "";
    if (!this.tape) return;
    const last = this.rounds[this.rounds.length - 1];
    const gap =
      last && this.strategy === "A" && last.data.x !== undefined
        ? { from: last.player1.k, to: last.data.x }
        : null;
    const forced =
      last && this.strategy === "A"
        ? { from: last.data.x ?? 0, to: last.data.t ?? 0 }
        : last
          ? { from: last.player1.k + 1, to: last.data.y ?? 0 }
          : null;
    for (let pos = 0; pos <= this.tape.pendingK; pos++) {
      const cell = document.createElement("button");
      cell.type = "button";
      cell.className = "cell";
      cell.dataset.pos = String(pos);
      cell.textContent = String(pos);
      if (this.tape.isMember(pos)) cell.classList.add("member");
      if (this.tape.isLocked(pos)) {
        cell.classList.add("locked");
        cell.disabled = true; // read-only below the locked horizon
      }
      if (gap && pos > gap.from && pos < gap.to) cell.classList.add("excluded");
      if (forced && pos >= forced.from && pos <= forced.to) cell.classList.add("forced");
      cell.addEventListener("click", () => {
        if (this.tape && this.tape.toggle(pos)) {
          cell.classList.toggle("member", this.tape.isMember(pos));
          this.renderPendingState();
        }
      });
      tapeEl.appendChild(cell);
    }
    const editor = this.el("pending-editor");
    editor.hidden = false;
  }

  renderPendingState() {
    if (!this.tape) return;
    const problem = this.tape.problem();
    const submit = this.el<HTMLButtonElement>("submit");
    submit.disabled = this.busy || problem !== null;
    this.el("pending-problem").textContent =
      problem === null ? "" : describeProblem(problem);
  }

  private renderAudit() {
    const body = this.el("audit").querySelector("tbody")!;
    body.textContent = "";
    if (!this.audit) return;
    for (const check of this.audit.checks) {
      const row = document.createElement("tr");
      row.className = `audit-row ${checkPasses(check) ? "pass" : "fail"}`;
      const cells: string[] = [`m=${check.m}`];
      if (isCheckA(check)) {
        cells.push(
          `r(${check.zero_target}) = ${check.zero_count} ${check.zero_ok ? "✓" : "✗"}`,
          `r(${check.t}) = ${check.count_at_t} ≥ ${check.threshold} ${check.growth_ok ? "✓" : "✗"}`,
        );
      } else {
        cells.push(
          `|A ∩ (${check.k}, ${check.y}]| = ${check.window}`,
          `ratio ${check.ratio} ≥ ${check.required} ${check.ratio_ok ? "✓" : "✗"}`,
          check.certificate
            ? `certificate: C(${check.certificate.s}, ${check.certificate.h}) = ` +
              `${check.certificate.subsets} > ${check.certificate.cap}`
            : "no certificate yet",
        );
      }
      for (const text of cells) {
        const td = document.createElement("td");
        td.textContent = text;
        row.appendChild(td);
      }
      body.appendChild(row);
    }
  }

  private renderChartBox() {
    const box = this.el("chart-box");
    if (!this.prefix) {
      box.textContent = "";
      return;
    }
    const marks: ChartMark[] =
      this.audit && this.audit.strategy === "A"
        ? this.audit.checks.filter(isCheckA).map((c) => ({ t: c.t, threshold: c.threshold }))
        : [];
    renderChart(box, this.prefix, marks);
  }
}

export function createApp(root: HTMLElement, api: Api): App {
  return new App(root, api);
}
