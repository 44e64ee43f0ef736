import { ApiClient } from './api.js';
import { App } from './app.js';
import { escapeHtml } from './marks.js';
import type { AppState } from './state.js';
import { renderAuditTimeline } from './views/auditTimeline.js';
import { renderDeepDiveRunner } from './views/deepDiveRunner.js';
import { renderGovernanceChecklist } from './views/governanceChecklist.js';
import { renderUseCaseBoard } from './views/useCaseBoard.js';
import { renderWhatIfPanel } from './views/whatIfPanel.js';

const TABS: Array<{ id: AppState['tab']; title: string; render: (s: AppState) => string }> = [
  { id: 'board', title: 'Use-Case Board', render: renderUseCaseBoard },
  { id: 'whatif', title: 'What-If', render: renderWhatIfPanel },
  { id: 'governance', title: 'Governance Checklist', render: renderGovernanceChecklist },
  { id: 'deepdive', title: 'Deep-Dive Runner', render: renderDeepDiveRunner },
  { id: 'audit', title: 'Audit Timeline', render: renderAuditTimeline }
];

function renderShell(state: AppState): string {
  const session = state.session;
  const tabs = TABS.map(
    (tab) => `<button class="tab ${state.tab === tab.id ? 'active' : ''}" data-action="tab" data-tab="${tab.id}">${tab.title}</button>`
  ).join('');
  const banner = state.conflict
    ? `<div class="banner conflict" role="alert">
         ${escapeHtml(state.error ?? 'Revision conflict.')}
         <button data-action="reload-session">Reload and merge</button>
       </div>`
    : state.error
      ? `<div class="banner error" role="alert">${escapeHtml(state.error)}
           <button data-action="dismiss-error">Dismiss</button></div>`
      : '';
  const active = TABS.find((tab) => tab.id === state.tab) ?? TABS[0];
  return `<header>
      <h1>Assessment console</h1>
      <p class="session-line">${session ? `${escapeHtml(session.company)} · ${escapeHtml(session.id)} · rev ${session.revision} · ${session.status}` : 'loading…'}</p>
      <nav aria-label="views">${tabs}</nav>
    </header>
    ${banner}
    <main>${active.render(state)}</main>`;
}

async function boot(): Promise<void> {
  const root = document.getElementById('app');
  if (!root) return;

  const client = new ApiClient('', 'console');
  const app = new App(client);

  app.store.subscribe(() => {
    root.innerHTML = renderShell(app.store.get());
  });

  root.addEventListener('click', (event) => {
    const target = (event.target as HTMLElement).closest('[data-action]') as HTMLElement | null;
    if (!target) return;
    const data = target.dataset;
    switch (data.action) {
      case 'tab': {
        const tab = data.tab as AppState['tab'];
        app.store.set({ tab });
        if (tab === 'audit') void app.refreshAudit();
        if (tab === 'deepdive' && !app.store.get().questions.length) void app.refreshQuestions();
        if (tab === 'whatif' && !app.store.get().whatIf.matrix) void app.resetWhatIf();
        break;
      }
      case 'cycle-mark':
        void app.cycleMark(data.uc ?? '', data.topic ?? '');
        break;
      case 'open-override':
        app.openOverride(data.uc ?? '');
        break;
      case 'submit-override':
        void app.submitOverride();
        break;
      case 'cancel-override':
        app.cancelOverride();
        break;
      case 'toggle-indicator':
        void app.toggleIndicator(data.indicator ?? '');
        break;
      case 'answer':
        void app.answer(data.question ?? '', Number(data.value));
        break;
      case 'whatif-apply':
        void app.applyWhatIf();
        break;
      case 'whatif-reset':
        void app.resetWhatIf();
        break;
      case 'reload-session':
        void app.reloadSession();
        break;
      case 'dismiss-error':
        app.store.set({ error: null });
        break;
    }
  });

  root.addEventListener('change', (event) => {
    const target = event.target as HTMLElement;
    const data = target.dataset;
    const value = (target as HTMLInputElement | HTMLSelectElement).value;
    switch (data.action) {
      case 'set-scope':
        void app.setScope(data.uc ?? '', value);
        break;
      case 'override-level':
        app.setOverrideLevel(value);
        break;
      case 'override-note':
        app.setOverrideNote(value);
        break;
      case 'indicator-evidence':
        app.setIndicatorEvidence(data.indicator ?? '', value);
        void app.saveGovernance();
        break;
      case 'filter':
        void app.setFilter(data.filter as 'org_type' | 'category' | 'esg_topic', value);
        break;
      case 'final-level': {
        const principle = data.principle ?? '';
        const note = (root.querySelector(`input[data-action="final-note"][data-principle="${principle}"]`) as HTMLInputElement | null)?.value ?? '';
        void app.setFinalLevel(principle, value, note);
        break;
      }
      case 'whatif-param':
        app.setWhatIfParam(data.key as 'w1' | 'w2' | 'w3' | 't_high' | 't_low', Number(value));
        break;
      case 'whatif-encoding':
        app.setWhatIfEncoding(data.key ?? '', Number(value));
        break;
    }
  });

  const params = new URLSearchParams(window.location.search);
  const existing = params.get('session');
  const session = await app.boot(existing);
  if (!existing) {
    params.set('session', session.id);
    window.history.replaceState(null, '', `${window.location.pathname}?${params.toString()}`);
  }
}

void boot();
