import init, { compute, sweep, sample } from "./pkg/bezout_subres_web.js";

const $ = (id) => document.getElementById(id);
const out = $("out");

function esc(s) {
  return String(s).replace(/[&<>]/g, (c) => ({ "&": "&amp;", "<": "&lt;", ">": "&gt;" })[c]);
}

function call(fn, ...args) {
  const reply = JSON.parse(fn(...args));
  if (reply.error) {
    out.innerHTML = `<p class="bad">${esc(reply.error)}</p>`;
    return null;
  }
  return reply;
}

function showCompute() {
  const r = call(compute, $("polys").value, $("delta").value);
  if (!r) return;
  let html = `<p>degrees (${r.degrees.join(", ")}), delta (${r.delta.join(", ")}): ` +
    (r.agree ? "all formulas agree" : '<span class="bad">formulas disagree</span>') + "</p>";
  for (const f of r.formulas) {
    html += `<h3>${esc(f.formula)}: ${f.rows}x${f.cols}, lc exponent ${f.exponent}</h3>`;
    html += `<div class="matrix"><table>`;
    for (const row of f.matrix) {
      html += "<tr>" + row.map((c) => `<td>${esc(c)}</td>`).join("") + "</tr>";
    }
    html += `</table></div><pre>S = ${esc(f.s)}</pre>`;
  }
  out.innerHTML = html;
}

function showSweep() {
  const r = call(sweep, $("polys").value);
  if (!r) return;
  let html = `<p>${r.agreeing}/${r.rows.length} delta agree</p><table>` +
    "<tr><th>delta</th><th>bezout</th><th>hybrid</th><th>nonhom</th></tr>";
  for (const row of r.rows) {
    const cls = row.agree ? "" : ' class="bad"';
    html += `<tr${cls}><td>${row.delta.join(",")}</td>` +
      row.s.map((s) => `<td>${esc(s)}</td>`).join("") + "</tr>";
  }
  out.innerHTML = html + "</table>";
}

function plot() {
  const from = parseFloat($("from").value);
  const to = parseFloat($("to").value);
  const r = call(sample, $("polys").value, $("delta").value, from, to, 400);
  if (!r) return;
  out.innerHTML = `<pre>S = ${esc(r.s)}</pre>`;
  const canvas = $("canvas");
  const ctx = canvas.getContext("2d");
  const w = canvas.width, h = canvas.height;
  ctx.clearRect(0, 0, w, h);
  const finite = r.ys.filter(Number.isFinite);
  let lo = Math.min(0, ...finite), hi = Math.max(0, ...finite);
  if (hi === lo) { hi += 1; lo -= 1; }
  const px = (x) => ((x - from) / (to - from)) * w;
  const py = (y) => h - ((y - lo) / (hi - lo)) * h;
  ctx.strokeStyle = "#999";
  ctx.beginPath();
  ctx.moveTo(0, py(0)); ctx.lineTo(w, py(0));
  if (from < 0 && to > 0) { ctx.moveTo(px(0), 0); ctx.lineTo(px(0), h); }
  ctx.stroke();
  ctx.strokeStyle = "#05a";
  ctx.beginPath();
  r.xs.forEach((x, i) => (i ? ctx.lineTo(px(x), py(r.ys[i])) : ctx.moveTo(px(x), py(r.ys[i]))));
  ctx.stroke();
  ctx.fillStyle = "#333";
  ctx.fillText(`[${lo.toPrecision(4)}, ${hi.toPrecision(4)}]`, 4, 12);
}

await init();
$("compute").onclick = showCompute;
$("sweep").onclick = showSweep;
$("plot").onclick = plot;
showCompute();
