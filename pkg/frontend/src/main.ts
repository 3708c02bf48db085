/**
 * Browser entry point: wires the form, the board, hover previews, and the
 * optional coach badge to the play service.
 *
 * Clicking token at height h removes tokens h..top (Nim takes from the
 * top), i.e. proposes lowering the heap to h-1.  Hovering shows the
 * legality preview before anything is sent; the server still has the last
 * word and a 422 surfaces as an inline banner.  One request is in flight
 * at a time and the board state only ever comes from server responses.
 */

import { ApiClient, ApiRejection } from './api.js';
import { type BoardView, buildBoardView, previewMove } from './board.js';
import { type Coloring, parseColoring } from './coloring.js';
import { renderBoard } from './render.js';
import type { SessionState } from './types.js';

interface App {
  client: ApiClient;
  coloring: Coloring;
  state: SessionState;
  view: BoardView;
  coach: boolean;
  busy: boolean;
}

let app: App | null = null;

function el<T extends HTMLElement>(id: string): T {
  const found = document.getElementById(id);
  if (!found) throw new Error(`missing element #${id}`);
  return found as T;
}

function banner(text: string, kind: 'info' | 'error' = 'info'): void {
  const box = el<HTMLDivElement>('banner');
  box.textContent = text;
  box.className = kind;
  box.style.display = text ? 'block' : 'none';
}

async function refreshView(state: SessionState): Promise<void> {
  if (!app) return;
  app.state = state;
  let coach = null;
  if (app.coach) {
    try {
      coach = await app.client.analysis(state.spec, state.position);
    } catch {
      coach = null; // analysis over cap is not fatal for play
    }
  }
  app.view = buildBoardView(state, app.coloring, coach);
  el<HTMLDivElement>('board').innerHTML = renderBoard(app.view);
  if (state.status === 'Finished') {
    banner(`game over: ${state.winner} made the last move and wins`);
  }
}

async function newGame(): Promise<void> {
  const base = el<HTMLInputElement>('base').value;
  const spec = el<HTMLInputElement>('spec').value;
  const start = el<HTMLInputElement>('start').value;
  const coach = el<HTMLInputElement>('coach').checked;
  const client = new ApiClient(base);
  try {
    const coloring = parseColoring(spec);
    const k = start.split(',').filter((v) => v.trim() !== '').length;
    const state = await client.createGame(spec, k, start, 'HumanVsEngine');
    app = { client, coloring, state, view: null as unknown as BoardView, coach, busy: false };
    banner('');
    await refreshView(state);
  } catch (err) {
    banner(err instanceof Error ? err.message : String(err), 'error');
  }
}

function tokenTarget(event: Event): { heap: number; height: number } | null {
  const target = event.target as HTMLElement | null;
  if (!target || !target.classList.contains('token')) return null;
  return {
    heap: Number(target.dataset['heap']),
    height: Number(target.dataset['height']),
  };
}

async function onBoardClick(event: Event): Promise<void> {
  if (!app || app.busy) return;
  const hit = tokenTarget(event);
  if (!hit) return;
  const newSize = hit.height - 1;
  const preview = previewMove(app.view, app.coloring, hit.heap, newSize);
  if (!preview.legal) {
    banner(`illegal: ${preview.reason}`, 'error');
    return;
  }
  const heap = app.view.heaps[hit.heap];
  if (!heap) return;
  app.busy = true;
  try {
    banner('');
    const state = await app.client.move(app.state.id, heap.size, newSize);
    await refreshView(state);
  } catch (err) {
    if (err instanceof ApiRejection) {
      banner(`server rejected the move: ${err.reason}`, 'error');
    } else {
      banner(String(err), 'error');
    }
  } finally {
    app.busy = false;
  }
}

function markDoomedTokens(heap: number | null, height: number): void {
  for (const node of document.querySelectorAll<HTMLElement>('.token')) {
    const doomed =
      heap !== null &&
      Number(node.dataset['heap']) === heap &&
      Number(node.dataset['height']) >= height;
    node.classList.toggle('doomed', doomed);
  }
}

function onBoardHover(event: Event): void {
  if (!app) return;
  const hint = el<HTMLDivElement>('hint');
  const hit = tokenTarget(event);
  if (!hit) {
    hint.textContent = '';
    markDoomedTokens(null, 0);
    return;
  }
  const heap = app.view.heaps[hit.heap];
  if (!heap) return;
  const newSize = hit.height - 1;
  const preview = previewMove(app.view, app.coloring, hit.heap, newSize);
  markDoomedTokens(hit.heap, hit.height);
  hint.textContent = preview.legal
    ? `lower ${heap.size} to ${newSize}: legal`
    : `lower ${heap.size} to ${newSize}: illegal (${preview.reason})`;
}

export function start(): void {
  el<HTMLButtonElement>('new-game').addEventListener('click', () => void newGame());
  const board = el<HTMLDivElement>('board');
  board.addEventListener('click', (e) => void onBoardClick(e));
  board.addEventListener('mouseover', onBoardHover);
}

if (typeof document !== 'undefined') {
  document.addEventListener('DOMContentLoaded', start);
}
