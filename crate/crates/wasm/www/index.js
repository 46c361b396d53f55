import init, { tree_grid, resistance, excess_curve } from "./pkg/dirres_wasm.js";

const $ = (id) => document.getElementById(id);

function showError(el, e) {
  el.innerHTML = "";
  const p = document.createElement("p");
  p.className = "error";
  p.textContent = String(e.message ?? e);
  el.appendChild(p);
}

function heat(t) {
  const h = 240 * (1 - t);
  return `hsl(${h}, 70%, 55%)`;
}

let grid = null;

function drawTree() {
  const canvas = $("tree-canvas");
  const ctx = canvas.getContext("2d");
  const info = $("tree-info");
  try {
    grid = JSON.parse(tree_grid(Number($("tree-size").value)));
  } catch (e) {
    grid = null;
    ctx.clearRect(0, 0, canvas.width, canvas.height);
    showError(info, e);
    return;
  }
  info.textContent = "";
  const cells = grid.size + 1;
  const cell = canvas.width / cells;
  const vals = grid.values.flat().filter((v) => v !== null);
  const lo = Math.min(...vals);
  const hi = Math.max(...vals);
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  for (let n = 0; n < cells; n++) {
    for (let m = 0; m < cells; m++) {
      const v = grid.values[n][m];
      ctx.fillStyle = v === null ? "#eee" : heat((v - lo) / (hi - lo || 1));
      ctx.fillRect(m * cell, n * cell, cell, cell);
    }
  }
}

function treeHover(ev) {
  if (!grid) return;
  const canvas = $("tree-canvas");
  const rect = canvas.getBoundingClientRect();
  const cell = rect.width / (grid.size + 1);
  const m = Math.floor((ev.clientX - rect.left) / cell);
  const n = Math.floor((ev.clientY - rect.top) / cell);
  if (n < 0 || m < 0 || n > grid.size || m > grid.size) return;
  const v = grid.values[n][m];
  $("tree-info").textContent =
    v === null ? `n=${n} m=${m}: undefined` : `n=${n} m=${m}: r = ${grid.exact[n][m]} = ${v.toFixed(6)}`;
}

function computeGraph() {
  const out = $("graph-out");
  let res;
  try {
    res = JSON.parse(resistance($("graph-text").value, Number($("graph-k").value), Number($("graph-j").value)));
  } catch (e) {
    showError(out, e);
    return;
  }
  out.innerHTML = "";
  const summary = document.createElement("p");
  summary.textContent = `${res.nodes} nodes, ${res.edges} edges.`;
  if (res.pair) {
    summary.textContent += ` r(${res.pair.k}, ${res.pair.j}) = ${res.pair.value.toPrecision(10)} via ${res.pair.method}.`;
  }
  out.appendChild(summary);

  const table = document.createElement("table");
  const head = table.insertRow();
  head.appendChild(document.createElement("th"));
  for (let b = 1; b <= res.nodes; b++) {
    const th = document.createElement("th");
    th.textContent = b;
    head.appendChild(th);
  }
  res.matrix.forEach((row, a) => {
    const tr = table.insertRow();
    const th = document.createElement("th");
    th.textContent = a + 1;
    tr.appendChild(th);
    for (const v of row) tr.insertCell().textContent = v.toFixed(4);
  });
  out.appendChild(table);
}

function plotExcess() {
  const canvas = $("excess-canvas");
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  let curve;
  try {
    curve = JSON.parse(excess_curve(Number($("excess-m").value), Number($("excess-d").value)));
  } catch (e) {
    ctx.fillStyle = "#b00";
    ctx.fillText(String(e.message ?? e), 10, 20);
    return;
  }
  const pad = 40;
  const w = canvas.width - 2 * pad;
  const h = canvas.height - 2 * pad;
  const logs = curve.excess.concat(curve.bound_next).filter((v) => v > 0).map(Math.log10);
  const lo = Math.floor(Math.min(...logs));
  const hi = Math.ceil(Math.max(...logs));
  const maxD = Math.max(1, curve.d[curve.d.length - 1] + 1);
  const x = (d) => pad + (d / maxD) * w;
  const y = (v) => pad + h - ((Math.log10(v) - lo) / (hi - lo || 1)) * h;

  ctx.strokeStyle = "#999";
  ctx.strokeRect(pad, pad, w, h);
  ctx.fillStyle = "#333";
  ctx.fillText(`1e${hi}`, 4, pad + 4);
  ctx.fillText(`1e${lo}`, 4, pad + h + 4);
  ctx.fillText("d", pad + w / 2, canvas.height - 8);
  ctx.fillText(String(maxD), pad + w - 10, pad + h + 14);

  const line = (xs, ys, color) => {
    ctx.strokeStyle = color;
    ctx.beginPath();
    xs.forEach((d, i) => (i ? ctx.lineTo : ctx.moveTo).call(ctx, x(d), y(ys[i])));
    ctx.stroke();
  };
  line(curve.d, curve.excess, "#1f5fbf");
  line(curve.d.map((d) => d + 1), curve.bound_next, "#d0622a");

  ctx.fillStyle = "#1f5fbf";
  ctx.fillText("e(m, d)", pad + w - 90, pad + 16);
  ctx.fillStyle = "#d0622a";
  ctx.fillText("bound", pad + w - 90, pad + 30);
}

await init();
$("tree-go").addEventListener("click", drawTree);
$("tree-canvas").addEventListener("mousemove", treeHover);
$("graph-go").addEventListener("click", computeGraph);
$("excess-go").addEventListener("click", plotExcess);
drawTree();
computeGraph();
plotExcess();
