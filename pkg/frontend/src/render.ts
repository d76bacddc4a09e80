/**
 * Pure DOM construction from a session view model. The renderer replaces the
 * container contents on every refresh and never keeps client-side state, so a
 * stale snapshot can always be repaired by refetching.
 */

import {
    SessionViewModel,
    formatEntropy,
    formatPrediction,
    queriedRow,
} from "./viewmodel.js";

export interface RenderHandlers {
    onSubmit?: (input: string, output: string) => void;
    onAccept?: () => void;
}

export interface RenderOptions {
    showEntropy?: boolean;
    pendingSubmit?: boolean;
    notice?: string | null;
}

function el(doc: Document, tag: string, className?: string, text?: string): HTMLElement {
    const node = doc.createElement(tag);
    if (className) node.className = className;
    if (text !== undefined) node.textContent = text;
    return node;
}

function banner(doc: Document, vm: SessionViewModel): HTMLElement {
    if (vm.status === "converged") {
        return el(doc, "div", "banner banner-done",
            "Converged: the program matches every answer you gave.");
    }
    if (vm.status === "failed") {
        return el(doc, "div", "banner banner-failed",
            `No program fits all the answers${vm.failure ? `: ${vm.failure}` : "."}`);
    }
    return el(doc, "div", "banner banner-running",
        `Round ${vm.iteration + 1}: please give the output for the highlighted row.`);
}

function dataTable(doc: Document, vm: SessionViewModel, options: RenderOptions): HTMLElement {
    const table = el(doc, "table", "rows");
    const head = el(doc, "tr");
    for (const label of ["Input", "Predicted output", ...(options.showEntropy ? ["Uncertainty"] : [])]) {
        head.appendChild(el(doc, "th", undefined, label));
    }
    table.appendChild(head);
    for (const row of vm.rows) {
        const tr = el(doc, "tr", row.isQueried ? "queried" : row.isExample ? "example" : "");
        tr.setAttribute("data-input", row.input);
        tr.appendChild(el(doc, "td", "cell-input", row.input));
        tr.appendChild(el(doc, "td", "cell-predicted", formatPrediction(row.predicted)));
        if (options.showEntropy) {
            tr.appendChild(el(doc, "td", "cell-entropy", formatEntropy(row.entropy)));
        }
        table.appendChild(tr);
    }
    return table;
}

function answerForm(doc: Document, vm: SessionViewModel, handlers: RenderHandlers,
                    options: RenderOptions): HTMLElement {
    const form = el(doc, "div", "answer-form");
    const target = queriedRow(vm);
    if (!target) return form;
    form.appendChild(el(doc, "label", "answer-label", `Output for "${target.input}":`));
    const field = doc.createElement("input");
    field.className = "answer-field";
    field.type = "text";
    form.appendChild(field);
    const emptyToggle = doc.createElement("input");
    emptyToggle.type = "checkbox";
    emptyToggle.className = "empty-toggle";
    const toggleLabel = el(doc, "label", "empty-label", "output is empty");
    toggleLabel.insertBefore(emptyToggle, toggleLabel.firstChild);
    form.appendChild(toggleLabel);
    const button = doc.createElement("button");
    button.className = "submit-answer";
    button.textContent = options.pendingSubmit ? "Sending…" : "Submit";
    if (options.pendingSubmit) button.setAttribute("disabled", "disabled");
    button.addEventListener("click", () => {
        const text = emptyToggle.checked ? "" : field.value;
        if (text === "" && !emptyToggle.checked) return;  // guard accidental empties
        handlers.onSubmit?.(target.input, text);
    });
    form.appendChild(button);
    return form;
}

function sidePanels(doc: Document, vm: SessionViewModel, handlers: RenderHandlers): HTMLElement {
    const panels = el(doc, "div", "panels");
    const programPanel = el(doc, "div", "panel program-panel");
    programPanel.appendChild(el(doc, "h3", undefined, "Current program"));
    programPanel.appendChild(el(doc, "p", "program-text",
        vm.program ?? "(no candidate yet — answer the first row)"));
    if (vm.status === "running" && vm.program) {
        const acceptButton = doc.createElement("button");
        acceptButton.className = "accept-button";
        acceptButton.textContent = "Accept this program";
        acceptButton.addEventListener("click", () => handlers.onAccept?.());
        programPanel.appendChild(acceptButton);
    }
    panels.appendChild(programPanel);

    const historyPanel = el(doc, "div", "panel history-panel");
    historyPanel.appendChild(el(doc, "h3", undefined, "Answers so far"));
    const list = el(doc, "ul", "history");
    for (const entry of vm.history) {
        list.appendChild(el(doc, "li", undefined,
            `#${entry.iteration}  ${entry.input} → ${JSON.stringify(entry.answer)}`));
    }
    historyPanel.appendChild(list);
    panels.appendChild(historyPanel);
    return panels;
}

export function render(doc: Document, container: HTMLElement, vm: SessionViewModel,
                       handlers: RenderHandlers = {}, options: RenderOptions = {}): void {
    container.textContent = "";
    container.appendChild(banner(doc, vm));
    if (options.notice) {
        container.appendChild(el(doc, "div", "banner banner-notice", options.notice));
    }
    container.appendChild(dataTable(doc, vm, options));
    if (vm.status === "running") {
        container.appendChild(answerForm(doc, vm, handlers, options));
    }
    container.appendChild(sidePanels(doc, vm, handlers));
}
