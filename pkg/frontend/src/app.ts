import {
  ApiClient,
  ApiError,
  type MarkResponse,
  type SessionDoc
} from './api.js';
import { canSubmitOverride, nextMark } from './marks.js';
import { Store, derivedByUseCase } from './state.js';
import { INDICATORS } from './views/governanceChecklist.js';
import { whatIfOverrides } from './views/whatIfPanel.js';

// All user intents as methods; every displayed number flows from the API
// responses these methods store, never from local arithmetic.
export class App {
  readonly store: Store;
  readonly client: ApiClient;

  constructor(client: ApiClient, store: Store = new Store()) {
    this.client = client;
    this.store = store;
  }

  // -- session lifecycle ---------------------------------------------------

  async boot(sessionId: string | null, company = 'New engagement'): Promise<SessionDoc> {
    const session = sessionId
      ? await this.client.getSession(sessionId)
      : await this.client.createSession(company);
    this.adoptSession(session);
    return session;
  }

  adoptSession(session: SessionDoc): void {
    const met: Record<string, boolean> = {};
    const evidence: Record<string, string> = {};
    for (const j of session.governance?.judgments ?? []) {
      met[j.indicator] = j.met;
      evidence[j.indicator] = j.evidence;
    }
    const answers: Record<string, number> = {};
    for (const [qid, score] of Object.entries(session.deep_dive?.answers ?? {})) {
      answers[qid] = score.value;
    }
    this.store.set({
      session,
      derived: derivedByUseCase(session),
      governanceMet: met,
      governanceEvidence: evidence,
      governanceScore: session.governance
        ? { score: session.governance.score, level: session.governance.level }
        : null,
      answers,
      principleResults: session.deep_dive?.principle_results ?? {},
      conflict: false,
      error: null,
      whatIf: {
        ...this.store.get().whatIf,
        t_high: session.config.t_high,
        t_low: session.config.t_low,
        w1: session.config.use_case_weights[0],
        w2: session.config.use_case_weights[1],
        w3: session.config.use_case_weights[2]
      }
    });
  }

  async reloadSession(): Promise<void> {
    const current = this.store.get().session;
    if (!current) return;
    await this.run(async () => {
      this.adoptSession(await this.client.getSession(current.id));
    });
  }

  // -- use-case board --------------------------------------------------------

  async cycleMark(useCase: string, topic: string): Promise<MarkResponse | null> {
    return this.run(async () => {
      const state = this.store.get();
      const profile = state.session?.use_case_profiles.find((p) => p.id === useCase);
      if (!state.session || !profile) throw new Error(`unknown use case ${useCase}`);
      const current = profile.impact_marks[topic] ?? 'not-applicable';
      const response = await this.client.postMarks(state.session.id, useCase, {
        marks: { [topic]: nextMark(current) }
      });
      this.applyMarkResponse(useCase, response);
      return response;
    });
  }

  async setScope(useCase: string, scope: string): Promise<MarkResponse | null> {
    return this.run(async () => {
      const session = this.requireSession();
      const response = await this.client.postMarks(session.id, useCase, { impact_scope: scope });
      this.applyMarkResponse(useCase, response);
      return response;
    });
  }

  private applyMarkResponse(useCase: string, response: MarkResponse): void {
    const state = this.store.get();
    const session = this.requireSession();
    const profiles = session.use_case_profiles.map((p) =>
      p.id === useCase ? { ...response.use_case, id: useCase } : p
    );
    this.store.set({
      session: { ...session, revision: response.revision, use_case_profiles: profiles },
      derived: { ...state.derived, [useCase]: response.derived }
    });
  }

  // -- materiality override ---------------------------------------------------

  openOverride(useCase: string): void {
    const profile = this.store.get().session?.use_case_profiles.find((p) => p.id === useCase);
    this.store.set({
      overrideDialog: {
        useCase,
        level: profile?.materiality_adjusted ?? profile?.materiality_default ?? 'medium',
        note: ''
      }
    });
  }

  setOverrideLevel(level: string): void {
    const dialog = this.store.get().overrideDialog;
    if (dialog) this.store.set({ overrideDialog: { ...dialog, level } });
  }

  setOverrideNote(note: string): void {
    const dialog = this.store.get().overrideDialog;
    if (dialog) this.store.set({ overrideDialog: { ...dialog, note } });
  }

  cancelOverride(): void {
    this.store.set({ overrideDialog: null });
  }

  /** Client-side guard first; the server enforces the same rule. Returns the
   * response, or null when blocked locally or rejected remotely. */
  async submitOverride(): Promise<MarkResponse | null> {
    const dialog = this.store.get().overrideDialog;
    if (!dialog) return null;
    if (!canSubmitOverride(dialog.note)) {
      this.store.set({ error: 'An override requires a justification note.' });
      return null;
    }
    return this.run(async () => {
      const session = this.requireSession();
      const response = await this.client.postOverride(session.id, dialog.useCase, dialog.level, dialog.note);
      this.applyMarkResponse(dialog.useCase, response);
      this.store.set({ overrideDialog: null });
      return response;
    });
  }

  // -- governance --------------------------------------------------------------

  async toggleIndicator(indicator: string): Promise<void> {
    const met = { ...this.store.get().governanceMet };
    met[indicator] = !met[indicator];
    this.store.set({ governanceMet: met });
    await this.saveGovernance();
  }

  setIndicatorEvidence(indicator: string, text: string): void {
    this.store.set({
      governanceEvidence: { ...this.store.get().governanceEvidence, [indicator]: text }
    });
  }

  async saveGovernance(): Promise<void> {
    await this.run(async () => {
      const session = this.requireSession();
      const state = this.store.get();
      const payload = INDICATORS.map(({ id }) => ({
        indicator: id,
        met: state.governanceMet[id] ?? false,
        evidence: state.governanceEvidence[id] ?? ''
      }));
      const response = await this.client.postGovernance(session.id, payload);
      this.store.set({
        session: { ...session, revision: response.revision, governance: response.governance },
        governanceScore: { score: response.score, level: response.level }
      });
    });
  }

  // -- deep dive ------------------------------------------------------------------

  async setFilter(name: 'org_type' | 'category' | 'esg_topic', value: string): Promise<void> {
    this.store.set({ filters: { ...this.store.get().filters, [name]: value } });
    await this.refreshQuestions();
  }

  async refreshQuestions(): Promise<void> {
    await this.run(async () => {
      const session = this.requireSession();
      const filters = this.store.get().filters;
      const response = await this.client.getQuestions(session.bank_version, {
        org_type: filters.org_type || undefined,
        category: filters.category || undefined,
        esg_topic: filters.esg_topic || undefined
      });
      this.store.set({ questions: response.questions });
    });
  }

  async answer(questionId: string, value: number): Promise<void> {
    await this.run(async () => {
      const session = this.requireSession();
      const response = await this.client.postAnswers(session.id, { [questionId]: { value } });
      this.store.set({
        session: { ...session, revision: response.revision },
        answers: { ...this.store.get().answers, [questionId]: value },
        principleResults: response.principle_results
      });
    });
  }

  async setFinalLevel(principle: string, level: string, note: string): Promise<void> {
    const current = this.store.get().principleResults[principle];
    if (current && current.suggested_level !== level && !canSubmitOverride(note)) {
      this.store.set({ error: 'Overriding the suggested level requires a note.' });
      return;
    }
    await this.run(async () => {
      const session = this.requireSession();
      const response = await this.client.postFinalOverride(session.id, principle, level, note || 'confirmed');
      this.store.set({
        session: { ...session, revision: response.revision },
        principleResults: { ...this.store.get().principleResults, [principle]: response.result }
      });
    });
  }

  // -- what-if -----------------------------------------------------------------------

  setWhatIfParam(key: 'w1' | 'w2' | 'w3' | 't_high' | 't_low', value: number): void {
    this.store.set({ whatIf: { ...this.store.get().whatIf, [key]: value } });
  }

  setWhatIfEncoding(key: string, value: number): void {
    const whatIf = this.store.get().whatIf;
    this.store.set({ whatIf: { ...whatIf, encodings: { ...whatIf.encodings, [key]: value } } });
  }

  async applyWhatIf(): Promise<void> {
    await this.run(async () => {
      const session = this.requireSession();
      const bundle = await this.client.getReport(session.id, whatIfOverrides(this.store.get()));
      this.store.set({
        whatIf: { ...this.store.get().whatIf, matrix: bundle.sections['materiality'], active: true }
      });
    });
  }

  async resetWhatIf(): Promise<void> {
    await this.run(async () => {
      const session = this.requireSession();
      this.store.set({
        whatIf: {
          t_high: session.config.t_high,
          t_low: session.config.t_low,
          w1: session.config.use_case_weights[0],
          w2: session.config.use_case_weights[1],
          w3: session.config.use_case_weights[2],
          encodings: {},
          matrix: null,
          active: false
        }
      });
      const bundle = await this.client.getReport(session.id);
      this.store.set({
        whatIf: { ...this.store.get().whatIf, matrix: bundle.sections['materiality'], active: false }
      });
    });
  }

  // -- audit --------------------------------------------------------------------------

  async refreshAudit(): Promise<void> {
    await this.run(async () => {
      const session = this.requireSession();
      this.store.set({ audit: await this.client.getAudit(session.id) });
    });
  }

  // -- plumbing ------------------------------------------------------------------------

  private requireSession(): SessionDoc {
    const session = this.store.get().session;
    if (!session) throw new Error('no session loaded');
    return session;
  }

  private async run<T>(work: () => Promise<T>): Promise<T | null> {
    try {
      const result = await work();
      if (this.store.get().error) this.store.set({ error: null });
      return result;
    } catch (err) {
      if (err instanceof ApiError && err.status === 409) {
        this.store.set({ conflict: true, error: 'Someone else saved this session first.' });
      } else if (err instanceof ApiError) {
        this.store.set({ error: `${err.message} (${err.code})` });
      } else {
        this.store.set({ error: err instanceof Error ? err.message : String(err) });
      }
      return null;
    }
  }
}

