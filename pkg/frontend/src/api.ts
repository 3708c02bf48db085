/** Thin typed client for the play service; throws ApiRejection on 4xx. */

import type { Analysis, LegalMove, Mode, SessionState } from './types.js';

export class ApiRejection extends Error {
  constructor(
    public readonly status: number,
    public readonly reason: string,
  ) {
    super(reason);
  }
}

async function unwrap<T>(resp: Response): Promise<T> {
  const body = (await resp.json()) as T | { reason?: string };
  if (!resp.ok) {
    const reason =
      typeof body === 'object' && body !== null && 'reason' in body && body.reason
        ? String(body.reason)
        : `http ${resp.status}`;
    throw new ApiRejection(resp.status, reason);
  }
  return body as T;
}

export class ApiClient {
  constructor(public readonly base: string) {}

  private url(path: string): string {
    return this.base.replace(/\/$/, '') + path;
  }

  async createGame(
    spec: string,
    k: number,
    start: string,
    mode: Mode,
  ): Promise<SessionState> {
    const resp = await fetch(this.url('/games'), {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify({ spec, k, start, mode }),
    });
    return unwrap<SessionState>(resp);
  }

  async getGame(id: string): Promise<SessionState> {
    return unwrap<SessionState>(await fetch(this.url(`/games/${id}`)));
  }

  async legalMoves(id: string): Promise<{ position: number[]; moves: LegalMove[] }> {
    return unwrap(await fetch(this.url(`/games/${id}/legal-moves`)));
  }

  async move(id: string, heapSizeFrom: number, to: number): Promise<SessionState> {
    const resp = await fetch(this.url(`/games/${id}/moves`), {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify({ heap_size_from: heapSizeFrom, to }),
    });
    return unwrap<SessionState>(resp);
  }

  async analysis(spec: string, position: number[], max?: number): Promise<Analysis> {
    const params = new URLSearchParams({ spec, pos: position.join(',') });
    if (max !== undefined) params.set('max', String(max));
    return unwrap<Analysis>(await fetch(this.url(`/analysis?${params}`)));
  }
}
