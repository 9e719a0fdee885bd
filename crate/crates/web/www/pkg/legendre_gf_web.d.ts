/* tslint:disable */
/* eslint-disable */

/**
 * Run one identity check, e.g. `main1` at order 30.
 */
export function check_identity(id: string, order: number, digits: number): string;

/**
 * The ids accepted by [`check_identity`].
 */
export function identity_ids(): string;

/**
 * `u_n` for `n < count`: decimal length, `u_n/u_{n−1}` and `u_n^{1/n}`.
 * Both ratios tend to 27.
 */
export function u_growth(count: number): string;

/**
 * `w(τ)` for `τ = i√r` with `r` on a grid over `[r_min, r_max]`, plus
 * the tabulated rows with their exact `w`.
 */
export function w_curve(r_min: number, r_max: number, samples: number, digits: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly check_identity: (a: number, b: number, c: number, d: number) => [number, number];
    readonly identity_ids: () => [number, number];
    readonly u_growth: (a: number) => [number, number];
    readonly w_curve: (a: number, b: number, c: number, d: number) => [number, number];
    readonly __externref_table_alloc: () => number;
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
