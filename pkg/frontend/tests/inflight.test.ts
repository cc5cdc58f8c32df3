import { describe, expect, it } from "vitest";

import { LatestWins } from "../src/inflight.js";

interface Deferred {
  promise: Promise<string>;
  resolve: (v: string) => void;
  reject: (e: unknown) => void;
}

function deferred(): Deferred {
  let resolve!: (v: string) => void;
  let reject!: (e: unknown) => void;
  const promise = new Promise<string>((res, rej) => {
    resolve = res;
    reject = rej;
  });
  return { promise, resolve, reject };
}

function harness() {
  const log: { sent: string[]; open: number; maxOpen: number } = {
    sent: [], open: 0, maxOpen: 0,
  };
  const pending: Deferred[] = [];
  const rendered: string[] = [];
  const errors: unknown[] = [];
  const gate = new LatestWins<string, string>(
    (req) => {
      log.sent.push(req);
      log.open += 1;
      log.maxOpen = Math.max(log.maxOpen, log.open);
      const d = deferred();
      pending.push(d);
      return d.promise.finally(() => {
        log.open -= 1;
      });
    },
    (_req, resp) => rendered.push(resp),
    (_req, err) => errors.push(err),
  );
  return { gate, log, pending, rendered, errors };
}

const tick = () => new Promise<void>((res) => setTimeout(res, 0));

describe("LatestWins request gate", () => {
  it("issues at most one request at a time", async () => {
    const { gate, log, pending, rendered } = harness();
    gate.submit("s1");
    gate.submit("s2");
    gate.submit("s3");
    expect(log.sent).toEqual(["s1"]); // s2 superseded by s3 while s1 in flight
    pending[0].resolve("r1");
    await tick();
    expect(log.sent).toEqual(["s1", "s3"]);
    pending[1].resolve("r3");
    await tick();
    expect(log.maxOpen).toBe(1);
    expect(rendered).toEqual(["r3"]); // stale r1 never rendered
  });

  it("renders the response when nothing superseded it", async () => {
    const { gate, pending, rendered } = harness();
    gate.submit("only");
    pending[0].resolve("resp");
    await tick();
    expect(rendered).toEqual(["resp"]);
  });

  it("fires the queued state after a failure, without reporting the stale error", async () => {
    const { gate, log, pending, rendered, errors } = harness();
    gate.submit("a");
    gate.submit("b");
    pending[0].reject(new Error("boom"));
    await tick();
    expect(errors).toHaveLength(0); // superseded: stale failure is dropped
    expect(log.sent).toEqual(["a", "b"]);
    pending[1].resolve("rb");
    await tick();
    expect(rendered).toEqual(["rb"]);
  });

  it("reports errors for the latest request", async () => {
    const { gate, pending, errors } = harness();
    gate.submit("a");
    pending[0].reject(new Error("bad request"));
    await tick();
    expect(errors).toHaveLength(1);
  });
});
