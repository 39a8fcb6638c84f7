// Application entry point: wires DOM events to the controller and renders
// on every state change.

import { GameApi } from "./api.js";
import { render } from "./render.js";
import { GameController, Viewport } from "./state.js";

const api = new GameApi("");
const controller = new GameController(api);
const viewport = new Viewport();

const canvas = document.getElementById("board") as HTMLCanvasElement;
const ctx = canvas.getContext("2d")!;
const presetSelect = document.getElementById("preset") as HTMLSelectElement;
const newGameBtn = document.getElementById("new-game") as HTMLButtonElement;
const hintBtn = document.getElementById("hint") as HTMLButtonElement;
const applyHintBtn = document.getElementById("apply-hint") as HTMLButtonElement;
const undoBtn = document.getElementById("undo") as HTMLButtonElement;

function resize(): void {
  canvas.width = canvas.clientWidth;
  canvas.height = canvas.clientHeight;
  draw();
}

function draw(): void {
  render(ctx, controller.view, viewport);
  applyHintBtn.disabled = controller.view.ghost === null;
}

controller.onChange = draw;

let panning = false;
let lastPointer = { x: 0, y: 0 };

canvas.addEventListener("mousedown", (ev) => {
  const rect = canvas.getBoundingClientRect();
  const px = ev.clientX - rect.left;
  const py = ev.clientY - rect.top;
  const world = viewport.screenToWorld(px, py);
  const hit = controller.vertexAt(world.x, world.y, 14 / viewport.scale);
  if (hit !== null && ev.button === 0) {
    controller.beginDrag(hit);
  } else {
    panning = true;
    lastPointer = { x: px, y: py };
  }
});

canvas.addEventListener("mousemove", (ev) => {
  const rect = canvas.getBoundingClientRect();
  const px = ev.clientX - rect.left;
  const py = ev.clientY - rect.top;
  if (controller.view.selected !== null) {
    const world = viewport.screenToWorld(px, py);
    controller.dragTo(world.x, world.y);
  } else if (panning) {
    viewport.pan(px - lastPointer.x, py - lastPointer.y);
    lastPointer = { x: px, y: py };
    draw();
  }
});

canvas.addEventListener("mouseup", () => {
  panning = false;
  if (controller.view.selected !== null) {
    void controller.commitDrag();
  }
});

canvas.addEventListener("mouseleave", () => {
  panning = false;
  if (controller.view.selected !== null) {
    controller.cancelDrag();
  }
});

window.addEventListener("keydown", (ev) => {
  if (ev.key === "Escape" && controller.view.selected !== null) {
    controller.cancelDrag();
  }
});

canvas.addEventListener("wheel", (ev) => {
  ev.preventDefault();
  const rect = canvas.getBoundingClientRect();
  viewport.zoomAt(
    ev.clientX - rect.left,
    ev.clientY - rect.top,
    ev.deltaY < 0 ? 1.15 : 1 / 1.15
  );
  draw();
});

newGameBtn.addEventListener("click", () => {
  void (async () => {
    await controller.newGame({ type: "preset", name: presetSelect.value });
    viewport.fit(controller.view.vertices, canvas.width, canvas.height);
    draw();
  })();
});

hintBtn.addEventListener("click", () => void controller.requestHint());
applyHintBtn.addEventListener("click", () => void controller.applyGhost());
undoBtn.addEventListener("click", () => void controller.undo());

window.addEventListener("resize", resize);

async function boot(): Promise<void> {
  const presets = await api.listPresets();
  for (const preset of presets) {
    const option = document.createElement("option");
    option.value = preset.name;
    option.textContent = preset.label;
    presetSelect.appendChild(option);
  }
  resize();
  await controller.newGame({ type: "preset", name: presets[0].name });
  viewport.fit(controller.view.vertices, canvas.width, canvas.height);
  draw();
}

void boot();
