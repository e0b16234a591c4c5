// Helpers for the decimal-string number policy. Strings are displayed
// verbatim and compared through BigInt; nothing here goes near floats
// except the final bar heights, which are percentages of a BigInt ratio.

export function cmpDecimal(a: string, b: string): number {
  const x = BigInt(a);
  const y = BigInt(b);
  return x < y ? -1 : x > y ? 1 : 0;
}

export function maxDecimal(values: string[]): string {
  let best = "0";
  for (const v of values) {
    if (cmpDecimal(v, best) > 0) best = v;
  }
  return best;
}

// Height of `value` as a percentage of `max`, exact until the final
// division by 10 (the result only positions pixels).
export function percentOf(value: string, max: string): number {
  const m = BigInt(max);
  if (m === 0n) return 0;
  return Number((BigInt(value) * 1000n) / m) / 10;
}
