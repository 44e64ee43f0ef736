// Impact-mark cycling and small input guards. Pure functions only; every
// score shown in the UI still comes from the server.

export const MARK_CYCLE = ['not-applicable', 'positive', 'negative', 'both'] as const;

const GLYPHS: Record<string, string> = {
  'not-applicable': 'N/A',
  positive: '+',
  negative: '-',
  both: '+/-'
};

export function nextMark(current: string): string {
  const index = MARK_CYCLE.indexOf(current as (typeof MARK_CYCLE)[number]);
  return MARK_CYCLE[(index + 1) % MARK_CYCLE.length];
}

export function markGlyph(mark: string): string {
  return GLYPHS[mark] ?? mark;
}

// Overrides need a justification; the server enforces the same rule with
// code override.note.required.
export function canSubmitOverride(note: string): boolean {
  return note.trim().length > 0;
}

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, '&amp;')
    .replace(/</g, '&lt;')
    .replace(/>/g, '&gt;')
    .replace(/"/g, '&quot;');
}
