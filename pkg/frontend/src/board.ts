/**
 * Board view and the client-side legality preview.
 *
 * Token colors derive solely from S membership of heights 1..size, and a
 * heap flags black exactly as the server rules it (empty heaps are black).
 * The preview mirrors the server's move predicate so hovering can warn
 * before a request goes out; the server stays authoritative.
 */

import { type Coloring, isBlackHeap, isBlackToken } from './coloring.js';
import type { Analysis, SessionState } from './types.js';

export type TokenColor = 'black' | 'white';

export interface HeapView {
  /** index within the sorted position array; disambiguates equal sizes */
  index: number;
  size: number;
  /** top token first, so tokenColors[0] is the color that rules the heap */
  tokenColors: TokenColor[];
  isBlackHeap: boolean;
}

export interface CoachView {
  outcome: 'P' | 'N' | 'Illegal';
  winningTargets: number[][];
}

export interface BoardView {
  sessionId: string;
  spec: string;
  heaps: HeapView[];
  toMove: string | null;
  status: 'InProgress' | 'Finished';
  winner: string | null;
  coach: CoachView | null;
}

export interface Preview {
  legal: boolean;
  reason?: string;
}

export function buildHeapView(coloring: Coloring, size: number, index: number): HeapView {
  const tokenColors: TokenColor[] = [];
  for (let h = size; h >= 1; h--) {
    tokenColors.push(isBlackToken(coloring, h) ? 'black' : 'white');
  }
  return { index, size, tokenColors, isBlackHeap: isBlackHeap(coloring, size) };
}

export function buildBoardView(
  state: SessionState,
  coloring: Coloring,
  coach: Analysis | null = null,
): BoardView {
  return {
    sessionId: state.id,
    spec: state.spec,
    heaps: state.position.map((size, index) => buildHeapView(coloring, size, index)),
    toMove: state.to_move,
    status: state.status,
    winner: state.winner,
    coach: coach ? { outcome: coach.outcome, winningTargets: coach.winning_targets } : null,
  };
}

/**
 * Would lowering heap `heapIndex` to `newSize` be accepted?  Pure check on
 * the hypothetical target; identical to the server's rule.
 */
export function previewMove(
  view: BoardView,
  coloring: Coloring,
  heapIndex: number,
  newSize: number,
): Preview {
  if (view.status !== 'InProgress') {
    return { legal: false, reason: 'game is finished' };
  }
  if (view.toMove === 'engine') {
    return { legal: false, reason: "not the human's turn" };
  }
  const heap = view.heaps[heapIndex];
  if (!heap) {
    return { legal: false, reason: `no heap at index ${heapIndex}` };
  }
  if (newSize < 0 || newSize >= heap.size) {
    return { legal: false, reason: 'move must lower the heap' };
  }
  const target = view.heaps.map((h, i) => (i === heapIndex ? newSize : h.size));
  if (!target.some((s) => isBlackHeap(coloring, s))) {
    return { legal: false, reason: 'no black heap remains' };
  }
  return { legal: true };
}
