import type { AppState } from '../state.js';
import { escapeHtml } from '../marks.js';

export const INDICATORS: Array<{ id: string; name: string; category: string }> = [
  { id: 'board-accountability', name: 'Board accountability', category: 'Board oversight' },
  { id: 'board-capability', name: 'Board capability', category: 'Board oversight' },
  { id: 'public-rai-policy', name: 'Public RAI policy', category: 'RAI commitment' },
  { id: 'sensitive-use-cases', name: 'Sensitive use cases', category: 'RAI commitment' },
  { id: 'rai-target', name: 'RAI target', category: 'RAI commitment' },
  { id: 'rai-responsibility', name: 'RAI responsibility', category: 'RAI implementation' },
  { id: 'employee-awareness', name: 'Employee awareness', category: 'RAI implementation' },
  { id: 'system-integration', name: 'System integration', category: 'RAI implementation' },
  { id: 'ai-incidents', name: 'AI incidents', category: 'RAI implementation' },
  { id: 'rai-metrics', name: 'RAI metrics', category: 'RAI metrics' }
];

// Ten binary judgments with evidence fields; the score/level banner shows
// only what the last server response said.
export function renderGovernanceChecklist(state: AppState): string {
  const groups = new Map<string, typeof INDICATORS>();
  for (const indicator of INDICATORS) {
    const list = groups.get(indicator.category) ?? [];
    list.push(indicator);
    groups.set(indicator.category, list);
  }

  const sections: string[] = [];
  for (const [category, indicators] of groups) {
    const items = indicators
      .map((indicator) => {
        const met = state.governanceMet[indicator.id] ?? false;
        const evidence = state.governanceEvidence[indicator.id] ?? '';
        return `<li>
          <label class="check">
            <input type="checkbox" data-action="toggle-indicator" data-indicator="${indicator.id}" ${met ? 'checked' : ''}>
            ${escapeHtml(indicator.name)}
          </label>
          <input type="text" class="evidence" placeholder="evidence" value="${escapeHtml(evidence)}"
            data-action="indicator-evidence" data-indicator="${indicator.id}"
            aria-label="evidence for ${escapeHtml(indicator.name)}">
        </li>`;
      })
      .join('');
    sections.push(`<fieldset><legend>${escapeHtml(category)}</legend><ul>${items}</ul></fieldset>`);
  }

  const result = state.governanceScore;
  const banner = result
    ? `<p class="score-banner">F = <strong data-field="gov-score">${result.score}</strong>
       · level <strong class="level level-${result.level}" data-field="gov-level">${result.level}</strong></p>`
    : '<p class="muted">Tick indicators to score; the level updates from the server response.</p>';

  return `<div class="governance">${banner}${sections.join('')}</div>`;
}
