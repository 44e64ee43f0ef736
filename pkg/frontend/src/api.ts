// Typed client for the v1 assessment API. The server is authoritative for
// every score and level; nothing in the console recomputes them.

export interface DerivedUseCase {
  impacted_topics: number;
  impact_level: string;
  risk_score: number;
  impact_score: number;
  scope_score: number;
  total: number;
  materiality_level: string;
  materiality_default?: string;
  materiality_adjusted?: string | null;
  materiality_effective?: string;
}

export interface UseCaseProfile {
  sector: string;
  name: string;
  description: string;
  regulatory_flag: string;
  impact_marks: Record<string, string>;
  impact_scope: string;
  materiality_default: string;
  materiality_adjusted: string | null;
  override_note: string | null;
  id?: string;
}

export interface SessionDoc {
  id: string;
  company: string;
  bank_version: string;
  config: ScoringConfigDoc;
  status: string;
  revision: number;
  use_case_profiles: UseCaseProfile[];
  governance: GovernanceDoc | null;
  deep_dive: DeepDiveDoc | null;
  derived?: { use_cases: Array<{ use_case: string } & DerivedUseCase> };
}

export interface ScoringConfigDoc {
  use_case_weights: number[];
  t_high: number;
  t_low: number;
  regulatory_encoding: Record<string, number>;
  impact_encoding: Record<string, number>;
  scope_encoding: Record<string, number>;
  governance_weights: number[];
}

export interface GovernanceDoc {
  company: string;
  judgments: Array<{ indicator: string; met: boolean; evidence: string }>;
  score: number;
  level: string;
}

export interface PrincipleResultDoc {
  average: number;
  suggested_level: string;
  final_level: string;
  override_note: string | null;
}

export interface DeepDiveDoc {
  company: string;
  bank_version: string;
  answers: Record<string, { value: number; band: string; evidence: string }>;
  principle_results: Record<string, PrincipleResultDoc>;
}

export interface BankQuestion {
  id: string;
  principle: string;
  key_question: string;
  indicator: string;
  text: string;
  esg_topics: string[];
  org_types: string[];
  system_categories: string[];
  obligation: Record<string, string>;
  provenance: string[];
  metrics: string[];
}

export interface ReportTable {
  header: string[];
  rows: string[][];
}

export interface ReportBundle {
  kind: string;
  inputs: Record<string, unknown>;
  sections: Record<string, ReportTable>;
}

export interface AuditEntry {
  id: string;
  actor: string;
  timestamp: string;
  action: string;
  before: unknown;
  after: unknown;
  note: string;
}

export interface MarkResponse {
  revision: number;
  use_case: UseCaseProfile;
  derived: DerivedUseCase;
}

export interface GovernanceResponse {
  revision: number;
  score: number;
  level: string;
  governance: GovernanceDoc;
}

export interface AnswersResponse {
  revision: number;
  principle_results: Record<string, PrincipleResultDoc>;
  answered: number;
}

export class ApiError extends Error {
  readonly status: number;
  readonly code: string;
  readonly details: unknown;

  constructor(status: number, code: string, message: string, details?: unknown) {
    super(message);
    this.status = status;
    this.code = code;
    this.details = details;
  }
}

export class ApiClient {
  readonly baseUrl: string;
  readonly actor: string;

  constructor(baseUrl = '', actor = 'console') {
    this.baseUrl = baseUrl.replace(/\/$/, '');
    this.actor = actor;
  }

  private async request<T>(method: string, path: string, body?: unknown, headers?: Record<string, string>): Promise<T> {
    const response = await fetch(`${this.baseUrl}${path}`, {
      method,
      headers: {
        'Content-Type': 'application/json',
        'X-Actor': this.actor,
        ...(headers ?? {})
      },
      body: body === undefined ? undefined : JSON.stringify(body)
    });
    const text = await response.text();
    const payload = text ? JSON.parse(text) : null;
    if (!response.ok) {
      const code = payload && typeof payload.code === 'string' ? payload.code : `http.${response.status}`;
      const message = payload && typeof payload.message === 'string' ? payload.message : response.statusText;
      throw new ApiError(response.status, code, message, payload?.details);
    }
    return payload as T;
  }

  listBanks(): Promise<Array<{ version: string; completeness: string; questions: number; metrics: number }>> {
    return this.request('GET', '/v1/banks');
  }

  getQuestions(
    version: string,
    filters: { org_type?: string; category?: string; esg_topic?: string; principle?: string[] } = {}
  ): Promise<{ version: string; count: number; questions: BankQuestion[] }> {
    const params = new URLSearchParams();
    if (filters.org_type) params.set('org_type', filters.org_type);
    if (filters.category) params.set('category', filters.category);
    if (filters.esg_topic) params.set('esg_topic', filters.esg_topic);
    for (const p of filters.principle ?? []) params.append('principle', p);
    const query = params.toString();
    return this.request('GET', `/v1/banks/${version}/questions${query ? '?' + query : ''}`);
  }

  createSession(company: string, bankVersion?: string): Promise<SessionDoc> {
    return this.request('POST', '/v1/sessions', { company, bank_version: bankVersion });
  }

  getSession(id: string): Promise<SessionDoc> {
    return this.request('GET', `/v1/sessions/${id}`);
  }

  putSession(id: string, revision: number, changes: Record<string, unknown>): Promise<SessionDoc> {
    return this.request('PUT', `/v1/sessions/${id}`, changes, { 'If-Match': String(revision) });
  }

  postMarks(
    sessionId: string,
    useCase: string,
    body: { marks?: Record<string, string>; impact_scope?: string; regulatory_flag?: string }
  ): Promise<MarkResponse> {
    return this.request('POST', `/v1/sessions/${sessionId}/use-cases/${useCase}/marks`, body);
  }

  postOverride(sessionId: string, useCase: string, level: string, note: string): Promise<MarkResponse> {
    return this.request('POST', `/v1/sessions/${sessionId}/use-cases/${useCase}/override`, { level, note });
  }

  postGovernance(
    sessionId: string,
    judgments: Array<{ indicator: string; met: boolean; evidence: string }>
  ): Promise<GovernanceResponse> {
    return this.request('POST', `/v1/sessions/${sessionId}/governance`, { judgments });
  }

  postAnswers(
    sessionId: string,
    answers: Record<string, { value: number; evidence?: string }>
  ): Promise<AnswersResponse> {
    return this.request('POST', `/v1/sessions/${sessionId}/deep-dive/answers`, { answers });
  }

  postFinalOverride(sessionId: string, principle: string, level: string, note: string): Promise<{
    revision: number;
    principle: string;
    result: PrincipleResultDoc;
  }> {
    return this.request('POST', `/v1/sessions/${sessionId}/deep-dive/override`, { principle, level, note });
  }

  getReport(sessionId: string, configOverride?: Record<string, unknown>): Promise<ReportBundle> {
    const params = new URLSearchParams({ format: 'json' });
    if (configOverride) params.set('config', JSON.stringify(configOverride));
    return this.request('GET', `/v1/sessions/${sessionId}/report?${params.toString()}`);
  }

  getAudit(sessionId: string): Promise<AuditEntry[]> {
    return this.request('GET', `/v1/sessions/${sessionId}/audit`);
  }

  getConfig(): Promise<ScoringConfigDoc> {
    return this.request('GET', '/v1/config');
  }
}
