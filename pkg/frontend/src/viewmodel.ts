/**
 * The session view the UI renders. Everything shown on screen comes from the
 * latest server snapshot; the UI never invents predictions of its own.
 */

export type SessionStatus = "running" | "converged" | "failed";

export interface SessionRow {
    input: string;
    predicted: string | null;
    entropy: number | null;
    isExample: boolean;
    isQueried: boolean;
}

export interface HistoryEntry {
    iteration: number;
    input: string;
    answer: string;
}

export interface SessionViewModel {
    id: string;
    status: SessionStatus;
    iteration: number;
    query: string | null;
    program: string | null;
    failure: string | null;
    rows: SessionRow[];
    history: HistoryEntry[];
}

const STATUSES: SessionStatus[] = ["running", "converged", "failed"];

/** Normalize a raw server payload; missing optional fields become nulls. */
export function toViewModel(raw: any): SessionViewModel {
    if (!raw || typeof raw !== "object") {
        throw new Error("empty session payload");
    }
    const status = STATUSES.includes(raw.status) ? (raw.status as SessionStatus) : "failed";
    const rows: SessionRow[] = Array.isArray(raw.rows)
        ? raw.rows.map((row: any) => ({
              input: String(row.input ?? ""),
              predicted: row.predicted ?? null,
              entropy: typeof row.entropy === "number" ? row.entropy : null,
              isExample: Boolean(row.is_example),
              isQueried: Boolean(row.is_queried),
          }))
        : [];
    const history: HistoryEntry[] = Array.isArray(raw.history)
        ? raw.history.map((h: any) => ({
              iteration: Number(h.iteration ?? 0),
              input: String(h.input ?? ""),
              answer: String(h.answer ?? ""),
          }))
        : [];
    return {
        id: String(raw.id ?? ""),
        status,
        iteration: Number(raw.iteration ?? 0),
        query: raw.query ?? null,
        program: raw.program ?? null,
        failure: raw.failure ?? null,
        rows,
        history,
    };
}

export function queriedRow(vm: SessionViewModel): SessionRow | null {
    return vm.rows.find((row) => row.isQueried) ?? null;
}

/**
 * Structural soundness of a snapshot: while running, exactly one row is
 * flagged as the query and it matches the server's query field; once the
 * session stops there is nothing left highlighted.
 */
export function invariantViolation(vm: SessionViewModel): string | null {
    const flagged = vm.rows.filter((row) => row.isQueried);
    if (vm.status === "running") {
        if (flagged.length !== 1) {
            return `expected exactly one queried row, saw ${flagged.length}`;
        }
        if (vm.query === null || flagged[0]!.input !== vm.query) {
            return `highlighted row ${flagged[0]!.input} != query ${vm.query}`;
        }
        return null;
    }
    if (flagged.length !== 0) {
        return `session is ${vm.status} but ${flagged.length} rows still highlighted`;
    }
    return null;
}

export function formatEntropy(entropy: number | null): string {
    return entropy === null ? "" : entropy.toFixed(2);
}

export function formatPrediction(predicted: string | null): string {
    return predicted === null ? "—" : predicted;
}
