/**
 * Pure rendering: BoardView in, HTML string out.  No DOM access here, so
 * the renderer is snapshot-testable under plain node.
 */

import type { BoardView, HeapView } from './board.js';

function escapeHtml(text: string): string {
  return text
    .replace(/&/g, '&amp;')
    .replace(/</g, '&lt;')
    .replace(/>/g, '&gt;')
    .replace(/"/g, '&quot;');
}

function renderHeap(heap: HeapView): string {
  const tokens = heap.tokenColors
    .map((color, i) => {
      const height = heap.size - i; // tokenColors runs top-down
      return (
        `<div class="token ${color}" data-heap="${heap.index}"` +
        ` data-height="${height}" title="token ${height}"></div>`
      );
    })
    .join('');
  const flag = heap.isBlackHeap ? 'black-heap' : 'white-heap';
  return (
    `<div class="heap ${flag}" data-heap="${heap.index}">` +
    `<div class="stack">${tokens}</div>` +
    `<div class="heap-label">${heap.size}</div>` +
    `</div>`
  );
}

function coachBadge(view: BoardView): string {
  if (!view.coach) return '';
  const { outcome, winningTargets } = view.coach;
  if (outcome === 'P') {
    return '<div class="coach badge-p">P &mdash; previous player wins</div>';
  }
  if (outcome === 'N') {
    const hints = winningTargets.map((t) => t.join(',')).join(' | ');
    return `<div class="coach badge-n">N &mdash; next player wins (to: ${hints})</div>`;
  }
  return `<div class="coach badge-illegal">${outcome}</div>`;
}

export function renderStatus(view: BoardView): string {
  if (view.status === 'Finished') {
    return `<div class="status finished">finished &mdash; ${escapeHtml(
      view.winner ?? '?',
    )} wins</div>`;
  }
  return `<div class="status">to move: ${escapeHtml(view.toMove ?? '?')}</div>`;
}

export function renderBoard(view: BoardView): string {
  const heaps = view.heaps.map(renderHeap).join('');
  return (
    `<div class="board" data-session="${escapeHtml(view.sessionId)}">` +
    `<div class="spec">${escapeHtml(view.spec)}</div>` +
    renderStatus(view) +
    coachBadge(view) +
    `<div class="heaps">${heaps}</div>` +
    `</div>`
  );
}
