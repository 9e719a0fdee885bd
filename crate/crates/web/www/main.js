import init, { w_curve, check_identity, identity_ids, u_growth } from "./pkg/legendre_gf_web.js";

const $ = (id) => document.getElementById(id);

function call(fn, ...args) {
  const out = JSON.parse(fn(...args));
  if (out && out.error) throw new Error(out.error);
  return out;
}

// Axes, then one polyline per series: {points: [[x, y]], dash, color}.
function plot(canvas, series, { xlabel, ylabel, hlines = [], dots = [] }) {
  const ctx = canvas.getContext("2d");
  const W = canvas.width, H = canvas.height, m = { l: 70, r: 15, t: 12, b: 36 };
  ctx.clearRect(0, 0, W, H);
  const all = series.flatMap((s) => s.points).concat(dots.map((d) => [d.x, d.y]));
  const xs = all.map((p) => p[0]);
  const ys = all.map((p) => p[1]).concat(hlines.map((h) => h.y));
  const [x0, x1] = [Math.min(...xs), Math.max(...xs)];
  let [y0, y1] = [Math.min(...ys), Math.max(...ys)];
  const pad = (y1 - y0) * 0.06 || 1;
  y0 -= pad; y1 += pad;
  const sx = (x) => m.l + ((x - x0) / (x1 - x0 || 1)) * (W - m.l - m.r);
  const sy = (y) => H - m.b - ((y - y0) / (y1 - y0)) * (H - m.t - m.b);

  ctx.strokeStyle = "#999"; ctx.lineWidth = 1; ctx.setLineDash([]);
  ctx.strokeRect(m.l, m.t, W - m.l - m.r, H - m.t - m.b);
  ctx.fillStyle = "#444"; ctx.font = "12px system-ui";
  for (let i = 0; i <= 4; i++) {
    const x = x0 + ((x1 - x0) * i) / 4, y = y0 + ((y1 - y0) * i) / 4;
    ctx.fillText(x.toPrecision(3), sx(x) - 12, H - m.b + 16);
    ctx.fillText(y.toPrecision(3), 4, sy(y) + 4);
  }
  ctx.fillText(xlabel, W / 2, H - 4);
  ctx.save(); ctx.translate(12, H / 2 - 20); ctx.rotate(-Math.PI / 2); ctx.fillText(ylabel, 0, 0); ctx.restore();

  for (const h of hlines) {
    ctx.strokeStyle = h.color || "#c33"; ctx.setLineDash([6, 4]);
    ctx.beginPath(); ctx.moveTo(m.l, sy(h.y)); ctx.lineTo(W - m.r, sy(h.y)); ctx.stroke();
  }
  for (const s of series) {
    ctx.strokeStyle = s.color || "#1f5fa8"; ctx.lineWidth = 1.6; ctx.setLineDash(s.dash || []);
    ctx.beginPath();
    s.points.forEach(([x, y], i) => (i ? ctx.lineTo(sx(x), sy(y)) : ctx.moveTo(sx(x), sy(y))));
    ctx.stroke();
  }
  ctx.setLineDash([]);
  for (const d of dots) {
    if (d.x < x0 || d.x > x1) continue;
    ctx.fillStyle = "#d06000";
    ctx.beginPath(); ctx.arc(sx(d.x), sy(d.y), 4, 0, 2 * Math.PI); ctx.fill();
    ctx.fillStyle = "#444"; ctx.fillText(d.label, sx(d.x) + 6, sy(d.y) - 6);
  }
}

function drawW() {
  const v = call(w_curve, +$("wmin").value, +$("wmax").value, +$("wn").value, 20);
  const dots = v.rows.map((r) => ({ x: r.r, y: r.w, label: r.id }));
  plot($("wplot"), [{ points: v.points }], {
    xlabel: "r  (τ = i√r)", ylabel: "w(τ)", hlines: [{ y: v.bound }], dots,
  });
}

function runCheck() {
  const out = $("cout");
  out.textContent = "running…";
  // let the browser paint before the synchronous check
  setTimeout(() => {
    try {
      const r = call(check_identity, $("cid").value, +$("corder").value, +$("cdigits").value);
      const cls = r.pass ? "pass" : "fail";
      out.innerHTML = `<span class="${cls}">${r.pass ? "PASS" : "FAIL"}</span> ${r.id}\n` +
        `kind: ${r.kind}   ${r.kind === "numeric" ? "digits" : "order"}: ${r.order_or_digits}\n` +
        `first failure: ${r.first_failure ?? "–"}   residual: ${r.residual ?? "–"}\n` +
        `elapsed: ${r.elapsed_s} s`;
    } catch (e) {
      out.textContent = "error: " + e.message;
    }
  }, 10);
}

function drawU() {
  const rows = call(u_growth, +$("un").value).filter((r) => r.n > 0);
  plot($("uplot"), [
    { points: rows.map((r) => [r.n, r.ratio]) },
    { points: rows.map((r) => [r.n, r.root]), dash: [2, 3], color: "#2a8a3a" },
  ], { xlabel: "n", ylabel: "growth", hlines: [{ y: 27, color: "#888" }] });
  const last = rows[rows.length - 1];
  $("uout").textContent =
    `u_${last.n} has ${last.digits} digits; u_n/u_(n-1) = ${last.ratio.toFixed(6)}, u_n^(1/n) = ${last.root.toFixed(6)}`;
}

function guard(fn) {
  return () => {
    try { fn(); } catch (e) { $("status").textContent = "error: " + e.message; }
  };
}

await init();
for (const id of JSON.parse(identity_ids())) {
  const o = document.createElement("option");
  o.value = o.textContent = id;
  $("cid").appendChild(o);
}
$("wgo").onclick = guard(drawW);
$("cgo").onclick = runCheck;
$("ugo").onclick = guard(drawU);
$("status").textContent = "Ready.";
guard(drawW)();
guard(drawU)();
