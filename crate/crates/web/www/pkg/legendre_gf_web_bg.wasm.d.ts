/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const check_identity: (a: number, b: number, c: number, d: number) => [number, number];
export const identity_ids: () => [number, number];
export const u_growth: (a: number) => [number, number];
export const w_curve: (a: number, b: number, c: number, d: number) => [number, number];
export const __externref_table_alloc: () => number;
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
