import type { AppState } from '../state.js';
import { escapeHtml, markGlyph } from '../marks.js';

const TOPICS = ['E1', 'E2', 'E3', 'S1', 'S2', 'S3', 'S4', 'S5', 'S6'];

// Sector grid: one card per use case, click-to-cycle mark buttons per topic,
// and the server-derived N / impact level / F / materiality beside them.
export function renderUseCaseBoard(state: AppState): string {
  const session = state.session;
  if (!session) return '<p class="muted">No session loaded.</p>';

  const bySector = new Map<string, typeof session.use_case_profiles>();
  for (const profile of session.use_case_profiles) {
    const list = bySector.get(profile.sector) ?? [];
    list.push(profile);
    bySector.set(profile.sector, list);
  }

  const sections: string[] = [];
  for (const [sector, profiles] of bySector) {
    const cards = profiles
      .map((profile) => {
        const id = profile.id ?? '';
        const derived = state.derived[id];
        const marks = TOPICS.map((topic) => {
          const mark = profile.impact_marks[topic] ?? 'not-applicable';
          return `<button class="mark mark-${mark}" data-action="cycle-mark" data-uc="${escapeHtml(id)}"
            data-topic="${topic}" aria-label="${topic} mark: ${markGlyph(mark)}">
            <span class="topic">${topic}</span><span class="glyph">${markGlyph(mark)}</span></button>`;
        }).join('');
        const overridden = profile.materiality_adjusted !== null;
        const scopeOptions = ['industry', 'systemic']
          .map((s) => `<option value="${s}" ${profile.impact_scope === s ? 'selected' : ''}>${s}</option>`)
          .join('');
        return `<article class="card" data-uc="${escapeHtml(id)}">
          <header>
            <h3>${escapeHtml(profile.name)}</h3>
            <span class="chip flag-${profile.regulatory_flag}">${profile.regulatory_flag}</span>
          </header>
          <div class="marks" role="group" aria-label="impact marks for ${escapeHtml(profile.name)}">${marks}</div>
          <dl class="derived">
            <div><dt>N</dt><dd data-field="n">${derived ? derived.impacted_topics : '·'}</dd></div>
            <div><dt>impact</dt><dd data-field="impact">${derived ? derived.impact_level : '·'}</dd></div>
            <div><dt>F</dt><dd data-field="total">${derived ? String(derived.total) : '·'}</dd></div>
            <div><dt>default</dt><dd data-field="default">${profile.materiality_default}</dd></div>
            <div><dt>effective</dt>
              <dd data-field="effective">${profile.materiality_adjusted ?? profile.materiality_default}${overridden ? ' <span class="chip overridden" title="analyst override">override</span>' : ''}</dd></div>
          </dl>
          <footer>
            <label>scope
              <select data-action="set-scope" data-uc="${escapeHtml(id)}">${scopeOptions}</select>
            </label>
            <button data-action="open-override" data-uc="${escapeHtml(id)}">Override level…</button>
          </footer>
        </article>`;
      })
      .join('');
    sections.push(`<section class="sector"><h2>${escapeHtml(sector)}</h2><div class="cards">${cards}</div></section>`);
  }

  return `<div class="board">${renderOverrideDialog(state)}${sections.join('')}</div>`;
}

export function renderOverrideDialog(state: AppState): string {
  const dialog = state.overrideDialog;
  if (!dialog) return '';
  const levels = ['high', 'medium', 'low']
    .map((l) => `<option value="${l}" ${dialog.level === l ? 'selected' : ''}>${l}</option>`)
    .join('');
  const noteEmpty = dialog.note.trim().length === 0;
  return `<div class="dialog" role="dialog" aria-label="override materiality">
    <h3>Override materiality — ${escapeHtml(dialog.useCase)}</h3>
    <label>new level <select data-action="override-level">${levels}</select></label>
    <label>justification <input type="text" data-action="override-note" value="${escapeHtml(dialog.note)}"
      placeholder="required" aria-required="true"></label>
    ${noteEmpty ? '<p class="warn" data-field="override-warning">A justification note is required.</p>' : ''}
    <button data-action="submit-override" ${noteEmpty ? 'disabled' : ''}>Apply override</button>
    <button data-action="cancel-override">Cancel</button>
  </div>`;
}
