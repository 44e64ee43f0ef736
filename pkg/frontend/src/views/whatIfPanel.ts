import type { AppState } from '../state.js';
import { escapeHtml } from '../marks.js';

// Threshold/weight/encoding experiments. Edits build a config-override
// payload; the matrix below is whatever the server's report endpoint
// returned for it — the stored session is never touched.
export function renderWhatIfPanel(state: AppState): string {
  const w = state.whatIf;
  const sliders = [
    slider('w1', 'weight: regulatory score', w.w1, 0, 3, 0.1),
    slider('w2', 'weight: impact score', w.w2, 0, 3, 0.1),
    slider('w3', 'weight: scope score', w.w3, 0, 3, 0.1),
    slider('t_high', 'threshold: high', w.t_high, 0, 5, 0.1),
    slider('t_low', 'threshold: low', w.t_low, 0, 5, 0.1)
  ].join('');

  const encodingInputs = Object.entries(w.encodings)
    .map(
      ([key, value]) => `<label class="enc">${escapeHtml(key)}
        <input type="number" step="0.1" min="0" max="1.5" value="${value}"
          data-action="whatif-encoding" data-key="${escapeHtml(key)}"></label>`
    )
    .join('');

  return `<div class="whatif">
    <div class="controls">
      ${sliders}
      <details><summary>encoding table</summary><div class="encodings">${encodingInputs}</div></details>
      <button data-action="whatif-apply">Preview matrix</button>
      <button data-action="whatif-reset">Reset to defaults</button>
      ${w.active ? '<span class="chip preview">preview</span>' : ''}
    </div>
    ${renderMatrix(state)}
  </div>`;
}

function slider(key: string, label: string, value: number, min: number, max: number, step: number): string {
  return `<label class="slider">${label}
    <input type="range" min="${min}" max="${max}" step="${step}" value="${value}"
      data-action="whatif-param" data-key="${key}" aria-label="${label}">
    <input type="number" min="${min}" max="${max}" step="${step}" value="${value}"
      data-action="whatif-param" data-key="${key}">
  </label>`;
}

function renderMatrix(state: AppState): string {
  const matrix = state.whatIf.matrix;
  if (!matrix) return '<p class="muted">No preview yet — apply a configuration.</p>';
  const defaultCol = matrix.header.indexOf('default');
  const head = matrix.header.map((h) => `<th scope="col">${escapeHtml(h)}</th>`).join('');
  const body = matrix.rows
    .map((row) => {
      const cells = row
        .map((cell, i) =>
          i === defaultCol
            ? `<td class="level level-${escapeHtml(cell)}" data-field="default">${escapeHtml(cell)}</td>`
            : `<td>${escapeHtml(cell)}</td>`
        )
        .join('');
      return `<tr>${cells}</tr>`;
    })
    .join('');
  return `<table class="matrix"><thead><tr>${head}</tr></thead><tbody>${body}</tbody></table>`;
}

/** Levels shown in the rendered matrix, row by row (used by tests and the CLI cross-check). */
export function matrixLevels(state: AppState): string[] {
  const matrix = state.whatIf.matrix;
  if (!matrix) return [];
  const defaultCol = matrix.header.indexOf('default');
  return matrix.rows.map((row) => row[defaultCol]);
}

/** The config-override payload the panel sends to the report endpoint. */
export function whatIfOverrides(state: AppState): Record<string, unknown> {
  const w = state.whatIf;
  const overrides: Record<string, unknown> = {
    use_case_weights: [w.w1, w.w2, w.w3],
    t_high: w.t_high,
    t_low: w.t_low
  };
  const regulatory: Record<string, number> = {};
  const impact: Record<string, number> = {};
  const scope: Record<string, number> = {};
  for (const [key, value] of Object.entries(w.encodings)) {
    const [table, variant] = key.split('.', 2);
    if (table === 'regulatory') regulatory[variant] = value;
    if (table === 'impact') impact[variant] = value;
    if (table === 'scope') scope[variant] = value;
  }
  if (Object.keys(regulatory).length) overrides.regulatory_encoding = regulatory;
  if (Object.keys(impact).length) overrides.impact_encoding = impact;
  if (Object.keys(scope).length) overrides.scope_encoding = scope;
  return overrides;
}
