/** Wire types of the play service, field names exactly as served. */

export type Mode = 'HumanVsEngine' | 'HumanVsHuman';
export type Status = 'InProgress' | 'Finished';

export interface HistoryEntry {
  player: string;
  heap_size_from: number;
  to: number;
  position: number[];
}

export interface SessionState {
  id: string;
  spec: string;
  k: number;
  start?: number[];
  position: number[];
  mode: Mode;
  status: Status;
  winner: string | null;
  to_move: string | null;
  history: HistoryEntry[];
  engine_move?: { heap_size_from: number; to: number; position: number[] } | null;
}

export interface LegalMove {
  heap_size_from: number;
  to: number;
  target: number[];
}

export interface Analysis {
  spec: string;
  position: number[];
  outcome: 'P' | 'N' | 'Illegal';
  grundy: number | null;
  winning_targets: number[][];
}

export interface ApiError {
  reason: string;
}
