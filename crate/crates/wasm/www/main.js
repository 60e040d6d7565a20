import init, { count, unrank, sample } from "./pkg/planar_rank_wasm.js";

const presets = {
  "triangle": [[1, 2], [1, 3], [2, 3]],
  "K4": [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4]],
  "bowtie": [[1, 2], [1, 3], [2, 3], [3, 4], [3, 5], [4, 5]],
  "two triangles": [[1, 2], [1, 3], [2, 3], [4, 5], [4, 6], [5, 6]],
  "wheel W5": [[1, 2], [1, 3], [1, 4], [1, 5], [1, 6], [2, 3], [3, 4], [4, 5], [5, 6], [2, 6]],
  "cube": [[1, 2], [2, 3], [3, 4], [1, 4], [5, 6], [6, 7], [7, 8], [5, 8], [1, 5], [2, 6], [3, 7], [4, 8]],
};

const $ = (id) => document.getElementById(id);
let total = 0n;

function graphJson(edges) {
  const n = Math.max(...edges.flat());
  return JSON.stringify({ vertices: Array.from({ length: n }, (_, i) => i + 1), edges });
}

function describe(text) {
  const e = JSON.parse(text);
  const lines = Object.entries(e.rotations).map(([v, ns]) => `${v}: ${ns.join(" ")}`);
  lines.push(`nesting ${JSON.stringify(e.nesting)}`, `faces ${JSON.stringify(e.face_tuple)}`);
  return lines.join("\n");
}

function guard(f) {
  $("error").textContent = "";
  try {
    f();
  } catch (err) {
    $("error").textContent = err.message ?? String(err);
  }
}

function refreshCount() {
  guard(() => {
    total = BigInt(count($("graph").value));
    $("count").textContent = `${total} embeddings`;
    const slider = $("slider");
    // the slider only reaches ranks a double can hold exactly
    const top = total - 1n <= BigInt(Number.MAX_SAFE_INTEGER) ? total - 1n : BigInt(Number.MAX_SAFE_INTEGER);
    slider.max = top.toString();
    slider.value = "0";
    $("rank").value = "0";
    show();
  });
}

function show() {
  guard(() => {
    $("embedding").textContent = describe(unrank($("graph").value, $("rank").value));
  });
}

for (const name of Object.keys(presets)) {
  $("preset").add(new Option(name, name));
}
$("preset").addEventListener("change", () => {
  $("graph").value = graphJson(presets[$("preset").value]);
  refreshCount();
});
$("count-btn").addEventListener("click", refreshCount);
$("slider").addEventListener("input", () => {
  $("rank").value = $("slider").value;
  show();
});
$("unrank-btn").addEventListener("click", show);
$("rank").addEventListener("keydown", (ev) => ev.key === "Enter" && show());
$("sample-btn").addEventListener("click", () =>
  guard(() => {
    const out = sample($("graph").value, $("seed").value, Number($("k").value));
    $("samples").textContent = out.trim().split("\n").map(describe).join("\n\n");
  }),
);

await init();
$("graph").value = graphJson(presets["triangle"]);
refreshCount();
