/** Thin typed client for the play service; throws ApiRejection on 4xx. */
export class ApiRejection extends Error {
    status;
    reason;
    constructor(status, reason) {
        super(reason);
        this.status = status;
        this.reason = reason;
    }
}
async function unwrap(resp) {
    const body = (await resp.json());
    if (!resp.ok) {
        const reason = typeof body === 'object' && body !== null && 'reason' in body && body.reason
            ? String(body.reason)
            : `http ${resp.status}`;
        throw new ApiRejection(resp.status, reason);
    }
    return body;
}
export class ApiClient {
    base;
    constructor(base) {
        this.base = base;
    }
    url(path) {
        return this.base.replace(/\/$/, '') + path;
    }
    async createGame(spec, k, start, mode) {
        const resp = await fetch(this.url('/games'), {
            method: 'POST',
            headers: { 'Content-Type': 'application/json' },
            body: JSON.stringify({ spec, k, start, mode }),
        });
        return unwrap(resp);
    }
    async getGame(id) {
        return unwrap(await fetch(this.url(`/games/${id}`)));
    }
    async legalMoves(id) {
        return unwrap(await fetch(this.url(`/games/${id}/legal-moves`)));
    }
    async move(id, heapSizeFrom, to) {
        const resp = await fetch(this.url(`/games/${id}/moves`), {
            method: 'POST',
            headers: { 'Content-Type': 'application/json' },
            body: JSON.stringify({ heap_size_from: heapSizeFrom, to }),
        });
        return unwrap(resp);
    }
    async analysis(spec, position, max) {
        const params = new URLSearchParams({ spec, pos: position.join(',') });
        if (max !== undefined)
            params.set('max', String(max));
        return unwrap(await fetch(this.url(`/analysis?${params}`)));
    }
}
//# sourceMappingURL=api.js.map