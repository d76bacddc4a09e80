/**
 * Browser wiring: dataset entry, the answer loop, and recovery paths.
 * One mutation in flight at a time; a 409 or a stale snapshot is repaired by
 * refetching the server view, a network failure keeps the last good view and
 * offers a retry.
 */

import { ApiError, acceptSession, createSession, getSession, submitAnswer } from "./api.js";
import { render } from "./render.js";
import { SessionViewModel, toViewModel } from "./viewmodel.js";

const base = "";

interface AppState {
    view: SessionViewModel | null;
    showEntropy: boolean;
    pendingSubmit: boolean;
    notice: string | null;
}

const state: AppState = { view: null, showEntropy: false, pendingSubmit: false, notice: null };

function container(): HTMLElement {
    return document.getElementById("session")!;
}

function redraw(): void {
    if (!state.view) return;
    render(document, container(), state.view, {
        onSubmit: (input, output) => void submit(input, output),
        onAccept: () => void accept(),
    }, {
        showEntropy: state.showEntropy,
        pendingSubmit: state.pendingSubmit,
        notice: state.notice,
    });
}

async function refresh(): Promise<void> {
    if (!state.view) return;
    state.view = toViewModel(await getSession(base, state.view.id));
    redraw();
}

async function submit(input: string, output: string): Promise<void> {
    if (!state.view || state.pendingSubmit) return;
    state.pendingSubmit = true;
    state.notice = null;
    redraw();
    try {
        state.view = toViewModel(await submitAnswer(base, state.view.id, input, output));
    } catch (err) {
        if (err instanceof ApiError && err.status === 409) {
            await refresh();  // someone else moved the session; show reality
        } else {
            state.notice = "Network problem; your answer was not recorded. Try again.";
        }
    } finally {
        state.pendingSubmit = false;
        redraw();
    }
}

async function accept(): Promise<void> {
    if (!state.view) return;
    try {
        state.view = toViewModel(await acceptSession(base, state.view.id));
    } catch {
        state.notice = "Network problem; could not accept.";
    }
    redraw();
}

async function start(): Promise<void> {
    const textarea = document.getElementById("dataset") as HTMLTextAreaElement;
    const rows = textarea.value.split("\n").map((s) => s.trimEnd()).filter((s) => s.length > 0);
    if (rows.length === 0) {
        state.notice = "Paste at least one row first.";
        return;
    }
    try {
        state.view = toViewModel(await createSession(base, rows));
        state.notice = null;
        document.getElementById("setup")!.classList.add("hidden");
        container().classList.remove("hidden");
        redraw();
    } catch (err) {
        const reason = err instanceof ApiError ? err.message : "network problem";
        alert(`Could not start the session: ${reason}`);
    }
}

export function wire(): void {
    document.getElementById("start")!.addEventListener("click", () => void start());
    const toggle = document.getElementById("toggle-details") as HTMLInputElement;
    toggle.addEventListener("change", () => {
        state.showEntropy = toggle.checked;
        redraw();
    });
}

if (typeof document !== "undefined" && document.getElementById("start")) {
    wire();
}
