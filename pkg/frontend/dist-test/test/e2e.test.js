/**
 * Live tests against the real service: spawns the Python server as a child
 * process, then checks (a) the client-side legality preview agrees with the
 * server verdict on 1,000 fuzzed moves, and (b) a scripted human-vs-engine
 * game from (3,4) under modular:2 ends with the engine winning.
 */
import assert from 'node:assert/strict';
import { spawn } from 'node:child_process';
import net from 'node:net';
import path from 'node:path';
import { after, before, test } from 'node:test';
import { fileURLToPath } from 'node:url';
import { ApiClient, ApiRejection } from '../src/api.js';
import { buildBoardView, previewMove } from '../src/board.js';
import { parseColoring, positionIsLegal } from '../src/coloring.js';
const HERE = path.dirname(fileURLToPath(import.meta.url));
const REPO_ROOT = path.resolve(HERE, '..', '..', '..');
let child = null;
let client;
function freePort() {
    return new Promise((resolve, reject) => {
        const srv = net.createServer();
        srv.listen(0, '127.0.0.1', () => {
            const addr = srv.address();
            if (addr && typeof addr === 'object') {
                const port = addr.port;
                srv.close(() => resolve(port));
            }
            else {
                srv.close(() => reject(new Error('no port')));
            }
        });
    });
}
before(async () => {
    const port = await freePort();
    child = spawn('python3', ['-m', 'bwnim.cli', 'serve', '--port', String(port)], {
        cwd: REPO_ROOT,
        env: { ...process.env, PYTHONPATH: path.join(REPO_ROOT, 'src') },
        stdio: ['ignore', 'pipe', 'inherit'],
    });
    const ready = new Promise((resolve, reject) => {
        let buffer = '';
        child.stdout.on('data', (chunk) => {
            buffer += chunk.toString();
            if (buffer.includes('bwnim service on http://'))
                resolve();
        });
        child.on('exit', (code) => reject(new Error(`service exited early: ${code}`)));
        setTimeout(() => reject(new Error('service did not start in time')), 15000);
    });
    await ready;
    client = new ApiClient(`http://127.0.0.1:${port}`);
});
after(() => {
    child?.kill();
});
/** Deterministic PRNG so failures replay. */
function mulberry32(seed) {
    let a = seed >>> 0;
    return () => {
        a = (a + 0x6d2b79f5) >>> 0;
        let t = Math.imul(a ^ (a >>> 15), 1 | a);
        t = (t + Math.imul(t ^ (t >>> 7), 61 | t)) ^ t;
        return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
    };
}
const FUZZ_SPECS = [
    'modular:2',
    'modular:3',
    'beatty:(1+1*sqrt(2))/1',
    'rational:5/2',
    'explicit:2,5,9',
];
function legalStart(coloring) {
    for (let x = 3; x < 12; x++) {
        for (let y = x; y < 12; y++) {
            if (positionIsLegal(coloring, [x, y]))
                return [x, y];
        }
    }
    throw new Error('no legal start found');
}
test('preview agrees with the server verdict on 1000 fuzzed moves', async () => {
    const rand = mulberry32(0x5eed);
    const games = [];
    for (const spec of FUZZ_SPECS) {
        const coloring = parseColoring(spec);
        const state = await client.createGame(spec, 2, legalStart(coloring).join(','), 'HumanVsHuman');
        games.push({ spec, coloring, state });
    }
    let checked = 0;
    let accepted = 0;
    let rejected = 0;
    while (checked < 1000) {
        const game = games[Math.floor(rand() * games.length)];
        const view = buildBoardView(game.state, game.coloring);
        const heapIndex = Math.floor(rand() * (view.heaps.length + 1)); // may be off the end
        const size = view.heaps[heapIndex]?.size ?? 0;
        const newSize = Math.floor(rand() * (size + 3)) - 1; // may exceed or go negative
        const preview = previewMove(view, game.coloring, heapIndex, newSize);
        let serverAccepted;
        let serverReason = '';
        try {
            // a heap off the end of the board is sent as size 0, which the
            // server rejects as a non-lowering move, matching the preview
            game.state = await client.move(game.state.id, size, newSize);
            serverAccepted = true;
        }
        catch (err) {
            if (!(err instanceof ApiRejection))
                throw err;
            serverAccepted = false;
            serverReason = err.reason;
            assert.ok(serverReason.length > 0, 'rejections carry a reason');
        }
        assert.equal(preview.legal, serverAccepted, `divergence on ${game.spec} pos=${view.heaps.map((h) => h.size)} ` +
            `heap#${heapIndex} -> ${newSize}: preview=${JSON.stringify(preview)} ` +
            `server=${serverAccepted ? 'accepted' : `rejected (${serverReason})`}`);
        checked += 1;
        if (serverAccepted)
            accepted += 1;
        else
            rejected += 1;
        if (game.state.status === 'Finished') {
            game.state = await client.createGame(game.spec, 2, legalStart(game.coloring).join(','), 'HumanVsHuman');
        }
    }
    assert.equal(checked, 1000);
    assert.ok(accepted > 50, `too few accepted moves to be meaningful: ${accepted}`);
    assert.ok(rejected > 50, `too few rejected moves to be meaningful: ${rejected}`);
});
test('scripted game from (3,4): engine converts and wins', async () => {
    const coloring = parseColoring('modular:2');
    let state = await client.createGame('modular:2', 2, '3,4', 'HumanVsEngine');
    assert.deepEqual(state.position, [3, 4]);
    assert.equal(state.to_move, 'human');
    // the losing side scripts a plausible but doomed line: 4 -> 2
    const view = buildBoardView(state, coloring);
    assert.equal(previewMove(view, coloring, 1, 2).legal, true);
    state = await client.move(state.id, 4, 2);
    // the engine's reply is the constructive move onto (1,2)
    assert.deepEqual(state.engine_move?.position, [1, 2]);
    assert.deepEqual(state.position, [1, 2]);
    // continuing the scripted line: take the 2-heap entirely
    state = await client.move(state.id, 2, 0);
    assert.equal(state.status, 'Finished');
    assert.equal(state.winner, 'engine');
    const last = state.history[state.history.length - 1];
    assert.equal(last.player, 'engine');
    assert.deepEqual(last.position, [0, 0]);
});
test('server rejection reasons surface through the client', async () => {
    const state = await client.createGame('explicit:2', 2, '1,2', 'HumanVsEngine');
    await assert.rejects(() => client.move(state.id, 2, 1), (err) => err instanceof ApiRejection &&
        err.status === 422 &&
        err.reason === 'target position has no black heap');
});
//# sourceMappingURL=e2e.test.js.map