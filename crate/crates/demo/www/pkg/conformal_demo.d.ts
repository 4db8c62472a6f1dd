/* tslint:disable */
/* eslint-disable */

/**
 * A mesh flattened for drawing: `xyz` triples and unique edges as index
 * pairs.
 */
export class Wireframe {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    readonly edges: Uint32Array;
    readonly face_count: number;
    readonly positions: Float64Array;
    readonly vertex_count: number;
}

export function convert_cone(x1: number, x2: number, x3: number, x4: number, x5: number, x6: number): string;

export function convert_event(x: number, y: number, z: number, t: number): string;

export function convert_plane(nx: number, ny: number, nz: number, h: number): string;

export function geodesic_wireframe(nx: number, ny: number, nz: number, samples: number, view: string): Wireframe;

export function surface_wireframe(name: string, res: string): Wireframe;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_wireframe_free: (a: number, b: number) => void;
    readonly convert_cone: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number, number];
    readonly convert_event: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly convert_plane: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly geodesic_wireframe: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number];
    readonly surface_wireframe: (a: number, b: number, c: number, d: number) => [number, number, number];
    readonly wireframe_edges: (a: number) => [number, number];
    readonly wireframe_face_count: (a: number) => number;
    readonly wireframe_positions: (a: number) => [number, number];
    readonly wireframe_vertex_count: (a: number) => number;
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
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
