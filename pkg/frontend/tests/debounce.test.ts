import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { DEBOUNCE_MS, debounce } from "../src/debounce.js";

describe("debounce", () => {
  beforeEach(() => vi.useFakeTimers());
  afterEach(() => vi.useRealTimers());

  it("collapses a slider-drag burst into one trailing call", () => {
    const calls: number[] = [];
    const fn = debounce((v: number) => calls.push(v));
    for (let i = 0; i < 20; i++) {
      fn(i);
      vi.advanceTimersByTime(DEBOUNCE_MS - 10);
    }
    expect(calls).toEqual([]);
    vi.advanceTimersByTime(DEBOUNCE_MS);
    expect(calls).toEqual([19]); // only the last value fires
  });

  it("fires separate calls for well-spaced changes", () => {
    const calls: number[] = [];
    const fn = debounce((v: number) => calls.push(v));
    fn(1);
    vi.advanceTimersByTime(DEBOUNCE_MS + 1);
    fn(2);
    vi.advanceTimersByTime(DEBOUNCE_MS + 1);
    expect(calls).toEqual([1, 2]);
  });

  it("cancel drops the pending call; flush forces it", () => {
    const calls: number[] = [];
    const fn = debounce((v: number) => calls.push(v));
    fn(1);
    fn.cancel();
    vi.advanceTimersByTime(DEBOUNCE_MS * 2);
    expect(calls).toEqual([]);
    fn(2);
    fn.flush();
    expect(calls).toEqual([2]);
  });
});
