/** At most one in-flight request; a newer submission supersedes the pending
 * one and stale responses are never rendered (last-write-wins).
 */

export class LatestWins<Req, Resp> {
  private inFlight = false;
  private queued: Req | null = null;
  private seq = 0;

  constructor(
    private readonly send: (req: Req) => Promise<Resp>,
    private readonly onResult: (req: Req, resp: Resp) => void,
    private readonly onError: (req: Req, err: unknown) => void = () => {},
  ) {}

  get busy(): boolean {
    return this.inFlight;
  }

  submit(req: Req): void {
    if (this.inFlight) {
      this.queued = req; // supersedes any previously queued state
      return;
    }
    void this.fire(req);
  }

  private async fire(req: Req): Promise<void> {
    this.inFlight = true;
    const mySeq = ++this.seq;
    try {
      const resp = await this.send(req);
      if (this.queued === null && mySeq === this.seq) {
        this.onResult(req, resp);
      }
      // otherwise a newer state is queued: drop this stale response
    } catch (err) {
      if (this.queued === null && mySeq === this.seq) {
        this.onError(req, err);
      }
    } finally {
      this.inFlight = false;
      if (this.queued !== null) {
        const next = this.queued;
        this.queued = null;
        void this.fire(next);
      }
    }
  }
}
