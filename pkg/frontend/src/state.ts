import type {
  AuditEntry,
  BankQuestion,
  DerivedUseCase,
  PrincipleResultDoc,
  ReportTable,
  SessionDoc
} from './api.js';

export interface WhatIfState {
  t_high: number;
  t_low: number;
  w1: number;
  w2: number;
  w3: number;
  encodings: Record<string, number>;
  matrix: ReportTable | null;
  active: boolean;
}

export interface DeepDiveFilters {
  org_type: string;
  category: string;
  esg_topic: string;
}

export interface AppState {
  tab: 'board' | 'whatif' | 'governance' | 'deepdive' | 'audit';
  session: SessionDoc | null;
  derived: Record<string, DerivedUseCase>;
  governanceMet: Record<string, boolean>;
  governanceEvidence: Record<string, string>;
  governanceScore: { score: number; level: string } | null;
  questions: BankQuestion[];
  filters: DeepDiveFilters;
  answers: Record<string, number>;
  principleResults: Record<string, PrincipleResultDoc>;
  whatIf: WhatIfState;
  audit: AuditEntry[];
  error: string | null;
  conflict: boolean;
  overrideDialog: { useCase: string; level: string; note: string } | null;
}

export function initialState(): AppState {
  return {
    tab: 'board',
    session: null,
    derived: {},
    governanceMet: {},
    governanceEvidence: {},
    governanceScore: null,
    questions: [],
    filters: { org_type: '', category: '', esg_topic: '' },
    answers: {},
    principleResults: {},
    whatIf: {
      t_high: 2,
      t_low: 1,
      w1: 1,
      w2: 1,
      w3: 1,
      encodings: {},
      matrix: null,
      active: false
    },
    audit: [],
    error: null,
    conflict: false,
    overrideDialog: null
  };
}

type Listener = () => void;

export class Store {
  private state: AppState;
  private listeners: Listener[] = [];

  constructor(state: AppState = initialState()) {
    this.state = state;
  }

  get(): AppState {
    return this.state;
  }

  set(patch: Partial<AppState>): void {
    this.state = { ...this.state, ...patch };
    for (const listener of this.listeners) listener();
  }

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }
}

/** Fold a session payload's derived block into a lookup keyed by use-case id. */
export function derivedByUseCase(session: SessionDoc): Record<string, DerivedUseCase> {
  const out: Record<string, DerivedUseCase> = {};
  for (const entry of session.derived?.use_cases ?? []) {
    const { use_case, ...rest } = entry;
    out[use_case] = rest;
  }
  return out;
}
