import type { AppState } from '../state.js';
import { escapeHtml } from '../marks.js';

// Read-only: the journal as the server returns it, newest last.
export function renderAuditTimeline(state: AppState): string {
  if (!state.audit.length) return '<p class="muted">No audit entries yet.</p>';
  const items = state.audit
    .map(
      (entry) => `<li class="audit-entry action-${entry.action}">
        <span class="when">${escapeHtml(entry.timestamp)}</span>
        <span class="who">${escapeHtml(entry.actor)}</span>
        <span class="what">${escapeHtml(entry.action)}</span>
        <span class="note">${escapeHtml(entry.note)}</span>
        <code class="diff">${escapeHtml(JSON.stringify(entry.before))} → ${escapeHtml(JSON.stringify(entry.after))}</code>
      </li>`
    )
    .join('');
  return `<ol class="audit">${items}</ol>`;
}
