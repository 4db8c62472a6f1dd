/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_wireframe_free: (a: number, b: number) => void;
export const convert_cone: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number, number];
export const convert_event: (a: number, b: number, c: number, d: number) => [number, number, number, number];
export const convert_plane: (a: number, b: number, c: number, d: number) => [number, number, number, number];
export const geodesic_wireframe: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number];
export const surface_wireframe: (a: number, b: number, c: number, d: number) => [number, number, number];
export const wireframe_edges: (a: number) => [number, number];
export const wireframe_face_count: (a: number) => number;
export const wireframe_positions: (a: number) => [number, number];
export const wireframe_vertex_count: (a: number) => number;
export const __wbindgen_externrefs: WebAssembly.Table;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __wbindgen_start: () => void;
