import assert from "node:assert/strict";
import { test } from "node:test";

import { render } from "../src/render.js";
import { toViewModel } from "../src/viewmodel.js";

const { JSDOM } = await import("jsdom");

function dom(): { doc: Document; root: HTMLElement } {
    const jsdom = new JSDOM("<main id='root'></main>");
    const doc = jsdom.window.document as unknown as Document;
    return { doc, root: doc.getElementById("root") as HTMLElement };
}

const running = toViewModel({
    id: "abc",
    status: "running",
    iteration: 0,
    query: "30 cm",
    program: "string from start of 1st digit run to end of 1st digit run",
    rows: [
        { input: "12 in", predicted: "12", entropy: 0.0, is_example: true, is_queried: false },
        { input: "30 cm", predicted: null, entropy: 1.58, is_example: false, is_queried: true },
    ],
    history: [{ iteration: 0, input: "12 in", answer: "12" }],
});

test("running view highlights exactly the queried row", () => {
    const { doc, root } = dom();
    render(doc, root, running);
    const highlighted = root.querySelectorAll("tr.queried");
    assert.equal(highlighted.length, 1);
    assert.equal(highlighted[0]!.getAttribute("data-input"), "30 cm");
});

test("failed predictions render as a dash", () => {
    const { doc, root } = dom();
    render(doc, root, running);
    const cells = [...root.querySelectorAll(".cell-predicted")].map((c) => c.textContent);
    assert.deepEqual(cells, ["12", "—"]);
});

test("entropy column is hidden unless requested and rounds to 2 decimals", () => {
    const { doc, root } = dom();
    render(doc, root, running);
    assert.equal(root.querySelectorAll(".cell-entropy").length, 0);
    render(doc, root, running, {}, { showEntropy: true });
    const cells = [...root.querySelectorAll(".cell-entropy")].map((c) => c.textContent);
    assert.deepEqual(cells, ["0.00", "1.58"]);
});

test("converged view shows a banner and no highlight or form", () => {
    const { doc, root } = dom();
    const done = toViewModel({
        id: "abc", status: "converged", iteration: 2, query: null,
        program: "constant \"x\"",
        rows: [{ input: "12 in", predicted: "12", entropy: 0.0,
                 is_example: true, is_queried: false }],
        history: [],
    });
    render(doc, root, done);
    assert.equal(root.querySelectorAll(".banner-done").length, 1);
    assert.equal(root.querySelectorAll("tr.queried").length, 0);
    assert.equal(root.querySelectorAll(".answer-form").length, 0);
});

test("failed view carries the reason", () => {
    const { doc, root } = dom();
    const failed = toViewModel({
        id: "abc", status: "failed", iteration: 1, query: null,
        failure: "no program in the grammar matches all examples",
        rows: [], history: [],
    });
    render(doc, root, failed);
    const banner = root.querySelector(".banner-failed");
    assert.ok(banner?.textContent?.includes("no program in the grammar"));
});

test("render survives minimal payloads without optional fields", () => {
    const { doc, root } = dom();
    render(doc, root, toViewModel({ id: "x", status: "running", query: "a",
                                    rows: [{ input: "a", is_queried: true }] }));
    assert.equal(root.querySelectorAll("tr.queried").length, 1);
});

test("submit handler receives the queried input and the typed output", () => {
    const { doc, root } = dom();
    const got: string[][] = [];
    render(doc, root, running, { onSubmit: (i, o) => got.push([i, o]) });
    const field = root.querySelector(".answer-field") as HTMLInputElement;
    field.value = "30";
    (root.querySelector(".submit-answer") as HTMLButtonElement).click();
    assert.deepEqual(got, [["30 cm", "30"]]);
});

test("empty-output toggle submits an empty string", () => {
    const { doc, root } = dom();
    const got: string[][] = [];
    render(doc, root, running, { onSubmit: (i, o) => got.push([i, o]) });
    const toggle = root.querySelector(".empty-toggle") as HTMLInputElement;
    toggle.checked = true;
    (root.querySelector(".submit-answer") as HTMLButtonElement).click();
    assert.deepEqual(got, [["30 cm", ""]]);
});

test("blank answer without the toggle is not submitted", () => {
    const { doc, root } = dom();
    const got: string[][] = [];
    render(doc, root, running, { onSubmit: (i, o) => got.push([i, o]) });
    (root.querySelector(".submit-answer") as HTMLButtonElement).click();
    assert.deepEqual(got, []);
});

test("pending submit disables the button", () => {
    const { doc, root } = dom();
    render(doc, root, running, {}, { pendingSubmit: true });
    const button = root.querySelector(".submit-answer") as HTMLButtonElement;
    assert.ok(button.hasAttribute("disabled"));
});
