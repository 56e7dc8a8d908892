import init, { analyze_text, generate, enumerate } from "./pkg/extremal_split_web.js";

const $ = (id) => document.getElementById(id);
const out = $("out");

function show(lines) {
  out.replaceChildren();
  const pre = document.createElement("pre");
  pre.textContent = lines.join("\n");
  out.append(pre);
}

function fail(e) {
  out.replaceChildren();
  const p = document.createElement("p");
  p.className = "error";
  p.textContent = String(e);
  out.append(p);
}

function verdict(c) {
  const v = c.verdict;
  switch (v.kind) {
    case "corona_branch": return `corona branch, c = ${v.c}`;
    case "design_branch": {
      const p = v.params;
      return `design branch (${p.v},${p.b},${p.r},${p.k},${p.lambda})`;
    }
    case "not_three_extremal": return `bidegreed, diameter 3, ${v.delta} eigenvalues`;
    default: return `outside the hypothesis: ${v.reason.kind}`;
  }
}

function analysisLines(a) {
  const g = a.report.graph;
  const lines = [`vertices ${g.vertices}, degrees ${g.degree_sequence}, diameter ${g.diameter ?? "∞"}`];
  const s = a.report.spectrum;
  if (s) {
    lines.push(`${s.delta} distinct eigenvalues`);
    for (const e of s.eigenvalues) lines.push(`  ${e.value}  (≈ ${e.approx.toFixed(6)})  ×${e.multiplicity}`);
  }
  lines.push(verdict(a.classification));
  for (const w of a.report.warnings) lines.push(`warning: ${w}`);
  return lines;
}

function run(f) {
  try { f(); } catch (e) { fail(e); }
}

await init();

$("analyze").onclick = () => run(() => {
  show(analysisLines(JSON.parse(analyze_text($("text").value, $("format").value))));
});

$("generate").onclick = () => run(() => {
  const a = JSON.parse(generate($("kind").value, Number($("n").value)));
  $("text").value = a.text;
  $("format").value = "";
  show(analysisLines(a));
});

$("enumerate").onclick = () => run(() => {
  const c = JSON.parse(enumerate(Number($("cmax").value), Number($("smax").value), $("only").checked));
  const lines = [`${c.matrices_scanned} matrices, ${c.classes} classes, ${c.entries.length} listed`];
  for (const e of c.entries) {
    lines.push(`c=${e.c} s=${e.s}  ${e.rows.join(" ")}  ${e.degrees}  ${verdict(e.classification)}`);
  }
  show(lines);
});
