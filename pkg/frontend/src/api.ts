/** Thin typed client over the three session endpoints. */

export class ApiError extends Error {
    constructor(public status: number, message: string) {
        super(message);
        this.name = "ApiError";
    }
}

async function request(url: string, init?: RequestInit): Promise<any> {
    const response = await fetch(url, {
        headers: { "content-type": "application/json" },
        ...init,
    });
    let body: any = null;
    try {
        body = await response.json();
    } catch {
        body = null;
    }
    if (!response.ok) {
        throw new ApiError(response.status, body?.error ?? response.statusText);
    }
    return body;
}

export interface SessionConfig {
    top?: number;
    random?: number;
    seed?: number;
    input_sampling?: string;
    candidates?: number;
    max_iterations?: number;
    top_distinguish?: number;
}

export function createSession(base: string, inputs: string[], config?: SessionConfig) {
    return request(`${base}/sessions`, {
        method: "POST",
        body: JSON.stringify(config ? { inputs, config } : { inputs }),
    });
}

export function getSession(base: string, id: string) {
    return request(`${base}/sessions/${id}`);
}

export function submitAnswer(base: string, id: string, input: string, output: string) {
    return request(`${base}/sessions/${id}/answer`, {
        method: "POST",
        body: JSON.stringify({ input, output }),
    });
}

export function acceptSession(base: string, id: string) {
    return request(`${base}/sessions/${id}/accept`, { method: "POST" });
}
