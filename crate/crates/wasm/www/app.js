import init, { familyOrdering, analyzeGraph, solveExact } from './pkg/radio_block_wasm.js';

const PARAMS = {
  extended_star: { m: 3, k: 2, h: 2, n: 4 },
  level_wise_regular_block: { m: 4, pairs: '1:3,1:3' },
  path_of_cliques: { h: 2, n: 3 },
};

const $ = (id) => document.getElementById(id);

function showParams() {
  const fam = $('family').value;
  $('params').innerHTML = Object.entries(PARAMS[fam])
    .map(([k, v]) => typeof v === 'number'
      ? `<label>${k} <input type="number" min="1" data-key="${k}" value="${v}"></label>`
      : `<label>${k} (k:m,...) <input data-key="${k}" value="${v}" size="12"></label>`)
    .join('');
}

function specJson() {
  const spec = { family: $('family').value };
  for (const input of $('params').querySelectorAll('input')) {
    const k = input.dataset.key;
    spec[k] = k === 'pairs'
      ? input.value.split(',').filter(Boolean).map((p) => p.split(':').map(Number))
      : Number(input.value);
  }
  return JSON.stringify(spec);
}

// Radial layout: central vertices near the middle, every other vertex placed
// inside the angular slice of its parent, one ring per level.
function layout(g, size) {
  const kids = Array.from({ length: g.order }, () => []);
  g.parent.forEach((p, v) => { if (p !== null) kids[p].push(v); });
  const leaves = new Array(g.order).fill(0);
  const count = (v) => (leaves[v] = kids[v].length ? kids[v].reduce((s, c) => s + count(c), 0) : 1);
  const roots = g.central_vertices;
  const total = roots.reduce((s, r) => s + count(r), 0);
  const maxLevel = Math.max(1, ...g.level);
  const step = (size / 2 - 30) / (maxLevel + (roots.length > 1 ? 0.5 : 0));
  const pos = [];
  const place = (v, a0, a1, r) => {
    const a = (a0 + a1) / 2;
    pos[v] = [size / 2 + r * Math.cos(a), size / 2 + r * Math.sin(a)];
    let start = a0;
    for (const c of kids[v]) {
      const span = ((a1 - a0) * leaves[c]) / leaves[v];
      place(c, start, start + span, r + step);
      start += span;
    }
  };
  let start = 0;
  for (const r of roots) {
    const span = (2 * Math.PI * leaves[r]) / total;
    place(r, start, start + span, roots.length > 1 ? step / 2 : 0);
    start += span;
  }
  return pos;
}

function draw(svg, g, labels) {
  const size = Number(svg.getAttribute('width'));
  const pos = layout(g, size);
  const central = new Set(g.central_vertices);
  const r = g.order > 120 ? 3 : 7;
  let out = '';
  for (const [u, v] of g.edges) {
    out += `<line x1="${pos[u][0]}" y1="${pos[u][1]}" x2="${pos[v][0]}" y2="${pos[v][1]}" stroke="#999"/>`;
  }
  for (let v = 0; v < g.order; v++) {
    const [x, y] = pos[v];
    const fill = central.has(v) ? '#246' : '#fff';
    out += `<circle cx="${x}" cy="${y}" r="${r}" fill="${fill}" stroke="#246"><title>vertex ${v}${g.names ? ' ' + g.names[v] : ''}</title></circle>`;
    if (labels && g.order <= 120) out += `<text x="${x + r + 1}" y="${y - r}">${labels[v]}</text>`;
  }
  svg.innerHTML = out;
}

function verdict(el, cert, extra) {
  const ok = cert && cert.verdict.status === 'certified';
  el.innerHTML = `${extra} <span class="${ok ? 'ok' : 'bad'}">${ok ? 'certified: span = lower bound'
    : 'not certified' + (cert ? ': ' + cert.verdict.reason : '')}</span>`;
}

function guard(status, f) {
  try {
    f();
  } catch (e) {
    status.innerHTML = `<span class="err">${e.message ?? e}</span>`;
  }
}

await init();
$('family').addEventListener('change', showParams);
showParams();

$('run-family').addEventListener('click', () => guard($('family-status'), () => {
  const g = JSON.parse(familyOrdering(specJson()));
  draw($('family-svg'), g, g.labels);
  verdict($('family-status'), g.certificate,
    `${g.family}: ${g.order} vertices, span ${g.span}, closed form ${g.closed_form}.`);
  $('family-out').textContent = g.ordering.map((v, i) => `${i}\t${g.names[v]}\t${g.labels[v]}`).join('\n');
}));

$('run-analyze').addEventListener('click', () => guard($('graph-status'), () => {
  const g = JSON.parse(analyzeGraph($('graph-text').value));
  draw($('graph-svg'), g, g.level);
  $('graph-status').textContent = `diameter ${g.diameter}, lower bound ${g.lb ?? 'undefined (diameter 1)'}; vertices show their level.`;
  $('graph-out').textContent = JSON.stringify(g, null, 1);
}));

$('run-exact').addEventListener('click', () => guard($('graph-status'), () => {
  const g = JSON.parse(solveExact($('graph-text').value, Number($('max-p').value)));
  draw($('graph-svg'), g, g.labels);
  verdict($('graph-status'), g.certificate, `rn = ${g.rn}, lower bound ${g.lb ?? '-'}.`);
  $('graph-out').textContent = g.ordering.map((v) => `${v}\t${g.labels[v]}`).join('\n');
}));

$('run-family').click();
