/**
 * Authentication flow state machine.
 *
 * idle -> challenge -> (submit) -> challenge ... -> accepted | rejected.
 * Network failures keep the session and surface a retry affordance; the
 * flow never stores or displays anything about the stored lock beyond the
 * unlabelled template the server chose to reveal.
 */

import { ApiError, AuthClient, ChallengeInfo, NetworkError } from "./api.js";
import type { CanvasState } from "./model.js";
import { composeSubmission, SubmissionError } from "./serialize.js";

export type FlowState =
  | { kind: "idle" }
  | { kind: "challenge"; round: number; template: ChallengeInfo["template"]; rotation: number }
  | { kind: "submitting"; round: number }
  | { kind: "accepted"; rounds: number }
  | { kind: "rejected" }
  | { kind: "trouble"; message: string; canRetry: boolean };

export type FlowListener = (state: FlowState) => void;

export class AuthFlow {
  private state: FlowState = { kind: "idle" };
  private sessionId: string | null = null;
  private userId: string | null = null;
  private listeners: FlowListener[] = [];
  private pending: CanvasState | null = null;

  constructor(private readonly client: AuthClient) {}

  current(): FlowState {
    return this.state;
  }

  session(): string | null {
    return this.sessionId;
  }

  onChange(listener: FlowListener): void {
    this.listeners.push(listener);
    listener(this.state);
  }

  private setState(next: FlowState): void {
    this.state = next;
    for (const l of this.listeners) {
      l(next);
    }
  }

  async begin(userId: string): Promise<FlowState> {
    this.userId = userId;
    try {
      const start = await this.client.startSession(userId);
      this.sessionId = start.session_id;
      this.setState({
        kind: "challenge",
        round: start.challenge.round,
        template: start.challenge.template,
        rotation: start.challenge.rotation_position,
      });
    } catch (err) {
      this.fail(err, /* sessionPreserved */ false);
    }
    return this.state;
  }

  /** Submit the drawn key for the current round. */
  async submit(canvas: CanvasState): Promise<FlowState> {
    if (this.state.kind !== "challenge" || this.sessionId === null) {
      throw new Error("no active challenge to answer");
    }
    const round = this.state.round;
    let graph: string;
    try {
      graph = composeSubmission(canvas).graph;
    } catch (err) {
      if (err instanceof SubmissionError) {
        this.setState({ kind: "trouble", message: err.message, canRetry: true });
        this.pending = null;
        return this.state;
      }
      throw err;
    }
    this.pending = canvas;
    this.setState({ kind: "submitting", round });
    try {
      const outcome = await this.client.submitRound(this.sessionId, graph);
      this.pending = null;
      if (outcome.result === "accepted") {
        this.setState({ kind: "accepted", rounds: round });
      } else if (outcome.result === "rejected") {
        this.sessionId = null;
        this.setState({ kind: "rejected" });
      } else {
        this.setState({
          kind: "challenge",
          round: outcome.challenge.round,
          template: outcome.challenge.template,
          rotation: outcome.challenge.rotation_position,
        });
      }
    } catch (err) {
      this.fail(err, /* sessionPreserved */ err instanceof NetworkError);
    }
    return this.state;
  }

  /** Retry after a network failure; the session id is still alive. */
  async retry(): Promise<FlowState> {
    if (this.state.kind !== "trouble" || !this.state.canRetry) {
      throw new Error("nothing to retry");
    }
    if (this.pending !== null && this.sessionId !== null) {
      const canvas = this.pending;
      const round = 0;
      this.setState({ kind: "submitting", round });
      const saved = this.pending;
      this.pending = null;
      // re-enter through submit by faking the challenge state; the server
      // is the source of truth for the round number
      this.setState({ kind: "challenge", round, template: { p: 0, edges: [] }, rotation: 0 });
      return this.submit(saved);
    }
    if (this.userId !== null) {
      return this.begin(this.userId);
    }
    this.setState({ kind: "idle" });
    return this.state;
  }

  private fail(err: unknown, sessionPreserved: boolean): void {
    if (err instanceof NetworkError) {
      if (!sessionPreserved) {
        this.sessionId = null;
      }
      this.setState({ kind: "trouble", message: err.message, canRetry: true });
    } else if (err instanceof ApiError) {
      this.sessionId = null;
      this.setState({ kind: "trouble", message: err.message, canRetry: false });
    } else {
      throw err;
    }
  }
}
