import init, { analyze, fiber_table, tame_symbol } from "./pkg/azumaya_wasm.js";

const $ = (id) => document.getElementById(id);

const EXAMPLES = {
  example1: ["3*(t+1)^3*(t-3)", "3*(t-1)^3*(t+3)", "x:t\nx-p:(t-1)*(t+3)\nx-q:(t+1)*(t-3)"],
  example2: ["(t-1)^2", "t^2+1", "x:t"],
};

function show(el, json) {
  const v = JSON.parse(json);
  el.classList.toggle("err", "error" in v);
  el.textContent = "error" in v ? `${v.error.code}: ${v.error.message}` : JSON.stringify(v, null, 2);
  return v;
}

function placeLabel(place) {
  return place.kind === "infinity" ? "∞" : place.poly;
}

// One bar per place, height proportional to k in I_k, width to the place degree.
function drawFibers(fibers) {
  const unit = 36, h = 160, gap = 8;
  const maxK = Math.max(...fibers.map((f) => Number(f.kodaira.slice(2))), 1);
  const width = fibers.reduce((w, f) => w + (f.place.degree ?? 1) * unit + gap, gap);
  const ns = "http://www.w3.org/2000/svg";
  const svg = document.createElementNS(ns, "svg");
  svg.setAttribute("width", width);
  svg.setAttribute("height", h + 40);
  let x = gap;
  for (const f of fibers) {
    const k = Number(f.kodaira.slice(2));
    const w = (f.place.degree ?? 1) * unit;
    const bh = (k / maxK) * h;
    const rect = document.createElementNS(ns, "rect");
    rect.setAttribute("x", x);
    rect.setAttribute("y", h - bh + 10);
    rect.setAttribute("width", w);
    rect.setAttribute("height", bh);
    rect.setAttribute("fill", f.place.kind === "infinity" ? "#c77" : "#69c");
    svg.appendChild(rect);
    const top = document.createElementNS(ns, "text");
    top.setAttribute("x", x + 2);
    top.setAttribute("y", h - bh + 6);
    top.textContent = f.kodaira;
    svg.appendChild(top);
    const label = document.createElementNS(ns, "text");
    label.setAttribute("x", x + 2);
    label.setAttribute("y", h + 26);
    label.textContent = placeLabel(f.place);
    svg.appendChild(label);
    x += w + gap;
  }
  $("fiber-chart").replaceChildren(svg);
}

function runFibers() {
  const v = JSON.parse(fiber_table($("p").value, $("q").value));
  if ("error" in v) {
    $("fiber-chart").replaceChildren();
    show($("fiber-out"), JSON.stringify(v));
    return;
  }
  drawFibers(v.surface.fibers);
  show($("fiber-out"), JSON.stringify(v.surface.invariants));
}

function runAnalyze() {
  show($("analyze-out"), analyze($("p").value, $("q").value, $("symbols").value, $("mode").value));
}

function runTame() {
  show($("tame-out"), tame_symbol($("tame-a").value, $("tame-b").value, $("tame-v").value));
}

await init();
for (const [id, [p, q, syms]] of Object.entries(EXAMPLES)) {
  $(id).addEventListener("click", () => {
    $("p").value = p;
    $("q").value = q;
    $("symbols").value = syms;
    runFibers();
  });
}
$("run-fibers").addEventListener("click", runFibers);
$("run-analyze").addEventListener("click", runAnalyze);
$("run-tame").addEventListener("click", runTame);
runFibers();
