/* tslint:disable */
/* eslint-disable */

/**
 * Columns of a sweep over a uniform time grid.
 */
export class Curve {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    corner(): Float64Array;
    /**
     * Bisection disentanglement time, if entanglement dies at a finite time.
     */
    esd_time(): number | undefined;
    /**
     * Largest `|numeric - analytic|` over the grid.
     */
    max_deviation(): number;
    min_pt_eigenvalue(): Float64Array;
    negativity_analytic(): Float64Array;
    negativity_numeric(): Float64Array;
    t(): Float64Array;
}

export class EsdSummary {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    analytic(): number | undefined;
    numeric(): number | undefined;
    /**
     * `"finite"`, `"never-entangled"` or `"no-death"`.
     */
    status(): string;
}

export function esd_times(kind: string, x: number, rate_a: number, rate_b: number): EsdSummary;

/**
 * Negativity curve for `kind` in `qubit | qutrit | multilocal`.
 */
export function negativity_curve(kind: string, x: number, rate_a: number, rate_b: number, t_max: number, steps: number): Curve;

export function pt_spectrum(kind: string, x: number, rate_a: number, rate_b: number, t: number): Float64Array;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_curve_free: (a: number, b: number) => void;
    readonly __wbg_esdsummary_free: (a: number, b: number) => void;
    readonly curve_corner: (a: number) => [number, number];
    readonly curve_esd_time: (a: number) => [number, number];
    readonly curve_max_deviation: (a: number) => number;
    readonly curve_min_pt_eigenvalue: (a: number) => [number, number];
    readonly curve_negativity_analytic: (a: number) => [number, number];
    readonly curve_negativity_numeric: (a: number) => [number, number];
    readonly curve_t: (a: number) => [number, number];
    readonly esd_times: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
    readonly esdsummary_analytic: (a: number) => [number, number];
    readonly esdsummary_numeric: (a: number) => [number, number];
    readonly esdsummary_status: (a: number) => [number, number];
    readonly negativity_curve: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number, number];
    readonly pt_spectrum: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
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
