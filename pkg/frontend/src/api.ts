import type { ComputeRequest, ComputeResponse, QuickExample, TypeInfo } from "./types.js";

export class ApiError extends Error {
  constructor(
    public status: number,
    public code: string,
    message: string,
    public position?: number,
  ) {
    super(message);
  }
}

export class ApiClient {
  constructor(private baseUrl: string = "") {}

  async types(): Promise<TypeInfo[]> {
    const r = await fetch(`${this.baseUrl}/api/types`);
    return (await r.json()) as TypeInfo[];
  }

  async examples(): Promise<QuickExample[]> {
    const r = await fetch(`${this.baseUrl}/api/examples`);
    return (await r.json()) as QuickExample[];
  }

  /** Returns the body even for 422 (empty coconjugation still has a scene). */
  async compute(request: ComputeRequest): Promise<{ status: number; body: ComputeResponse }> {
    const r = await fetch(`${this.baseUrl}/api/compute`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(request),
    });
    const body = (await r.json()) as ComputeResponse & { message?: string };
    if (r.status !== 200 && r.status !== 422) {
      throw new ApiError(r.status, body.code ?? "error", body.message ?? "request failed");
    }
    return { status: r.status, body };
  }
}
