import type { AppState } from '../state.js';
import { escapeHtml } from '../marks.js';

const ORG_TYPES = ['', 'developer', 'purchaser', 'both'];
const CATEGORIES = ['', 'high-risk', 'foundation-model', 'limited', 'minimal'];
const TOPICS = ['', 'E1', 'E2', 'E3', 'S1', 'S2', 'S3', 'S4', 'S5', 'S6', 'G1', 'G2', 'G3'];
const FINAL_LEVELS = ['strong', 'moderate', 'weak', 'unacceptable'];

export function renderDeepDiveRunner(state: AppState): string {
  return `<div class="deepdive">
    ${renderFilters(state)}
    ${renderPrincipleSummary(state)}
    ${renderQuestions(state)}
  </div>`;
}

function renderFilters(state: AppState): string {
  const select = (name: 'org_type' | 'category' | 'esg_topic', label: string, values: string[]) => {
    const options = values
      .map((v) => `<option value="${v}" ${state.filters[name] === v ? 'selected' : ''}>${v || '(all)'}</option>`)
      .join('');
    return `<label>${label} <select data-action="filter" data-filter="${name}">${options}</select></label>`;
  };
  return `<div class="filters" role="group" aria-label="question filters">
    ${select('org_type', 'organisational type', ORG_TYPES)}
    ${select('category', 'AI system category', CATEGORIES)}
    ${select('esg_topic', 'ESG topic', TOPICS)}
    <span class="muted" data-field="question-count">${state.questions.length} questions</span>
  </div>`;
}

function renderPrincipleSummary(state: AppState): string {
  const entries = Object.entries(state.principleResults);
  if (!entries.length) return '<p class="muted">Answer questions to build per-principle results.</p>';
  const rows = entries
    .map(([principle, result]) => {
      const overridden = result.final_level !== result.suggested_level;
      const levels = FINAL_LEVELS.map(
        (l) => `<option value="${l}" ${result.final_level === l ? 'selected' : ''}>${l}</option>`
      ).join('');
      return `<tr data-principle="${principle}">
        <th scope="row">${principle}</th>
        <td data-field="average">${result.average}</td>
        <td data-field="suggested">${result.suggested_level}</td>
        <td>
          <select data-action="final-level" data-principle="${principle}" aria-label="final level for ${principle}">${levels}</select>
          ${overridden ? '<span class="chip overridden">override</span>' : ''}
        </td>
        <td><input type="text" placeholder="override note" data-action="final-note" data-principle="${principle}"
          value="${escapeHtml(result.override_note ?? '')}" aria-label="override note for ${principle}"></td>
      </tr>`;
    })
    .join('');
  return `<table class="principles">
    <thead><tr><th>principle</th><th>running average</th><th>suggested</th><th>final</th><th>note</th></tr></thead>
    <tbody>${rows}</tbody>
  </table>`;
}

function renderQuestions(state: AppState): string {
  if (!state.questions.length) return '';
  const items = state.questions
    .map((q) => {
      const current = state.answers[q.id];
      const buttons = [0, 1, 2, 3, 4, 5]
        .map(
          (v) => `<button class="rubric ${current === v ? 'selected' : ''}" data-action="answer"
            data-question="${q.id}" data-value="${v}" aria-pressed="${current === v}"
            aria-label="score ${v} for ${q.id}">${v}</button>`
        )
        .join('');
      const tags = [
        ...q.esg_topics,
        ...q.system_categories.map((c) => (q.obligation[c] ? `${c}:${q.obligation[c]}` : c))
      ]
        .map((t) => `<span class="tag">${escapeHtml(t)}</span>`)
        .join('');
      return `<li class="question" data-question="${q.id}">
        <p><span class="chip">${q.principle}</span> <strong>${escapeHtml(q.indicator)}</strong> ${tags}</p>
        <p>${escapeHtml(q.text)}</p>
        <div class="rubric-row" role="group" aria-label="rubric for ${q.id}">${buttons}</div>
      </li>`;
    })
    .join('');
  return `<ol class="questions">${items}</ol>`;
}
