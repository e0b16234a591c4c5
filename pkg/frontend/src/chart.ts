import { cmpDecimal, maxDecimal, percentOf } from "./format.js";
import type { PrefixView } from "./types.js";

// Representation counts over [0, valid_up_to] as a bar chart, with a
// horizontal line at the latest round's growth threshold w_m * f(t_m).
// Wide tables are bucketed (max per bucket) down to MAX_BARS, but each
// marked x = t_m keeps an exact, unbucketed marker bar so the invariant
// "bar at t_m meets the threshold line" is visible and testable.

export const MAX_BARS = 240;

export interface ChartMark {
  t: number;
  threshold: string;
}

export function renderChart(container: HTMLElement, prefix: PrefixView, marks: ChartMark[]) {
  const counts = prefix.rep_table.counts;
  const latest = marks.length > 0 ? marks[marks.length - 1]! : null;
  const ceiling = maxDecimal([
    ...counts,
    ...marks.map((m) => m.threshold),
    ...marks.map((m) => counts[m.t] ?? "0"),
  ]);

  container.textContent = "";
  const chart = document.createElement("div");
  chart.className = "chart";

  const bucket = Math.max(1, Math.ceil(counts.length / MAX_BARS));
  for (let start = 0; start < counts.length; start += bucket) {
    const slice = counts.slice(start, start + bucket);
    const value = maxDecimal(slice);
    const bar = document.createElement("div");
    bar.className = "bar";
    bar.style.height = `${percentOf(value, ceiling)}%`;
    bar.dataset.x0 = String(start);
    bar.dataset.x1 = String(Math.min(start + bucket, counts.length) - 1);
    bar.title = `r on [${bar.dataset.x0}, ${bar.dataset.x1}]: max ${value}`;
    chart.appendChild(bar);
  }

  for (const mark of marks) {
    const value = counts[mark.t];
    if (value === undefined) continue;
    const marker = document.createElement("div");
    marker.className = "bar marker";
    if (cmpDecimal(value, mark.threshold) >= 0) marker.classList.add("meets");
    marker.style.height = `${percentOf(value, ceiling)}%`;
    marker.dataset.x = String(mark.t);
    marker.dataset.count = value;
    marker.dataset.threshold = mark.threshold;
    marker.title = `r(${mark.t}) = ${value}, threshold ${mark.threshold}`;
    chart.appendChild(marker);
  }

  if (latest) {
    const line = document.createElement("div");
    line.className = "threshold-line";
    line.style.bottom = `${percentOf(latest.threshold, ceiling)}%`;
    line.dataset.threshold = latest.threshold;
    chart.appendChild(line);
  }

  container.appendChild(chart);
}
