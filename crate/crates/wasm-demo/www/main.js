import init, { radical, schur_dimensions, spectrum_closure } from "./pkg/tca_wasm_demo.js";

const $ = (id) => document.getElementById(id);

function show(target, render) {
  try {
    target.replaceChildren(render());
  } catch (e) {
    const p = document.createElement("p");
    p.className = "error";
    p.textContent = String(e);
    target.replaceChildren(p);
  }
}

function el(tag, attrs = {}, children = []) {
  const node = document.createElement(tag);
  Object.assign(node, attrs);
  node.append(...children);
  return node;
}

function diagram(shape, caption) {
  const corners = new Set(shape.corners.map(([r, c]) => `${r},${c}`));
  const rows = shape.rows.map((len, i) =>
    el("div", { className: "row" }, Array.from({ length: len }, (_, j) =>
      el("div", { className: corners.has(`${i + 1},${j + 1}`) ? "box corner" : "box" }))));
  return el("div", { className: "diagram" }, [el("div", {}, [caption]), ...rows]);
}

function renderRadical() {
  const data = JSON.parse(radical($("sum").value));
  const summands = data.summands.map((d) => diagram(d, `(${d.rows.join(",")})`));
  const parts = [el("p", { textContent: `J = ${data.ideal}` }), el("div", {}, summands)];
  parts.push(el("p", { textContent: `radical = ${data.radical}` }));
  if (data.radicalShape) parts.push(diagram(data.radicalShape, "radical"));
  const primes = data.primes.map((p) =>
    p.zero ? "0 at ∞" : `I(${p.rows},${p.cols}) at (${p.point.join(",")})`);
  parts.push(el("p", { textContent: `minimal primes: ${primes.join(", ")}` }));
  return el("div", {}, parts);
}

function renderGrid() {
  const data = JSON.parse(schur_dimensions($("grid-lambda").value, Number($("grid-max").value)));
  const head = el("tr", {}, [el("th", { textContent: "r \\ s" }),
    ...data.grid[0].map((_, s) => el("th", { textContent: String(s) }))]);
  const rows = data.grid.map((row, r) => el("tr", {}, [el("th", { textContent: String(r) }),
    ...row.map((d) => el("td", { className: d === 0 ? "zero" : "", textContent: String(d) }))]));
  const note = el("p", { textContent: `λ = (${data.lambda.join(",")}), λ′ = (${data.transpose.join(",")}): the grid for λ′ is this one transposed.` });
  return el("div", {}, [note, el("table", {}, [head, ...rows])]);
}

function renderClosure() {
  const r = Number($("r").value);
  const s = Number($("s").value);
  const data = JSON.parse(spectrum_closure(r, s));
  const size = Math.max(r, s) + 2;
  const inside = new Set(data.points.map((p) => p.point.join(",")));
  const grid = el("div", { className: "poset" });
  grid.style.gridTemplateColumns = `repeat(${size}, 2.2rem)`;
  for (let a = size - 1; a >= 0; a--) {
    for (let b = 0; b < size; b++) {
      const key = `${a},${b}`;
      const cls = a === r && b === s ? "cell top" : inside.has(key) ? "cell in" : "cell";
      grid.append(el("div", { className: cls, textContent: key, title: `I(${a + 1},${b + 1})` }));
    }
  }
  const text = el("p", { textContent: `closure of (${r},${s}) = V(${data.prime}): ${data.points.length} points` });
  return el("div", {}, [text, grid]);
}

await init();
$("sum-go").onclick = () => show($("sum-out"), renderRadical);
$("grid-go").onclick = () => show($("grid-out"), renderGrid);
$("closure-go").onclick = () => show($("closure-out"), renderClosure);
show($("sum-out"), renderRadical);
show($("grid-out"), renderGrid);
show($("closure-out"), renderClosure);
