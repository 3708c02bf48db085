import assert from 'node:assert/strict';
import { test } from 'node:test';

import { buildBoardView } from '../src/board.js';
import { parseColoring } from '../src/coloring.js';
import { renderBoard } from '../src/render.js';
import type { SessionState } from '../src/types.js';

const S2 = parseColoring('explicit:2');

function state(): SessionState {
  return {
    id: 'deadbeef0001',
    spec: 'explicit:2',
    k: 2,
    position: [1, 2],
    mode: 'HumanVsEngine',
    status: 'InProgress',
    winner: null,
    to_move: 'human',
    history: [],
  };
}

test('rendering is a pure function of the view', () => {
  const view = buildBoardView(state(), S2);
  assert.equal(renderBoard(view), renderBoard(view));
});

test('rendered board carries tokens with colors and coordinates', () => {
  const html = renderBoard(buildBoardView(state(), S2));
  assert.match(html, /data-session="deadbeef0001"/);
  assert.match(html, /to move: human/);
  // the 2-heap: black on top of white
  assert.match(html, /class="token black" data-heap="1" data-height="2"/);
  assert.match(html, /class="token white" data-heap="1" data-height="1"/);
  // heap flags for the color rule
  assert.match(html, /class="heap white-heap" data-heap="0"/);
  assert.match(html, /class="heap black-heap" data-heap="1"/);
});

test('coach badge renders the P explanation', () => {
  const view = buildBoardView(state(), S2, {
    spec: 'explicit:2',
    position: [1, 2],
    outcome: 'P',
    grundy: 0,
    winning_targets: [],
  });
  assert.match(renderBoard(view), /P &mdash; previous player wins/);
});

test('finished games announce the winner', () => {
  const finished = {
    ...state(),
    status: 'Finished' as const,
    winner: 'engine',
    to_move: null,
  };
  assert.match(renderBoard(buildBoardView(finished, S2)), /engine wins/);
});
