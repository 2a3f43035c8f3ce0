/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_curve_free: (a: number, b: number) => void;
export const __wbg_esdsummary_free: (a: number, b: number) => void;
export const curve_corner: (a: number) => [number, number];
export const curve_esd_time: (a: number) => [number, number];
export const curve_max_deviation: (a: number) => number;
export const curve_min_pt_eigenvalue: (a: number) => [number, number];
export const curve_negativity_analytic: (a: number) => [number, number];
export const curve_negativity_numeric: (a: number) => [number, number];
export const curve_t: (a: number) => [number, number];
export const esd_times: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
export const esdsummary_analytic: (a: number) => [number, number];
export const esdsummary_numeric: (a: number) => [number, number];
export const esdsummary_status: (a: number) => [number, number];
export const negativity_curve: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number, number];
export const pt_spectrum: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_start: () => void;
