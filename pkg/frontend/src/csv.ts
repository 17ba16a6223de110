import { readFileSync } from "node:fs";

export type PanelKind = "single" | "split" | "gw";

export interface CurveRow {
    x: number;
    x2?: number;
    value: number;
}

export interface CurveFile {
    panel: PanelKind;
    path: string;
    rows: CurveRow[];
}

const HEADERS: Record<PanelKind, string> = {
    single: "beta,value",
    split: "beta1,beta2,value",
    gw: "rho,value",
};

export class CurveFormatError extends Error {}

export function parseCurveCsv(text: string, panel: PanelKind, path = "<memory>"): CurveFile {
    const lines = text.split(/\r?\n/).filter(line => line.trim().length > 0);
    if (lines.length === 0) {
        throw new CurveFormatError(`${path}: empty CSV`);
    }
    if (lines[0].trim() !== HEADERS[panel]) {
        throw new CurveFormatError(
            `${path}: expected header '${HEADERS[panel]}', got '${lines[0].trim()}'`);
    }
    if (lines.length === 1) {
        throw new CurveFormatError(`${path}: no data rows`);
    }
    const width = HEADERS[panel].split(",").length;
    const rows: CurveRow[] = [];
    for (let i = 1; i < lines.length; i++) {
        const parts = lines[i].split(",").map(Number);
        if (parts.length !== width || parts.some(Number.isNaN)) {
            throw new CurveFormatError(`${path}: malformed row ${i + 1}: '${lines[i]}'`);
        }
        const value = parts[parts.length - 1];
        if (value < 0 || value > 1) {
            throw new CurveFormatError(`${path}: row ${i + 1} value ${value} outside [0, 1]`);
        }
        rows.push(width === 3 ? { x: parts[0], x2: parts[1], value } : { x: parts[0], value });
    }
    for (let i = 1; i < rows.length; i++) {
        if (rows[i].x <= rows[i - 1].x) {
            throw new CurveFormatError(`${path}: first column not strictly increasing at row ${i + 2}`);
        }
    }
    return { panel, path, rows };
}

export function readCurveCsv(path: string, panel: PanelKind): CurveFile {
    let text: string;
    try {
        text = readFileSync(path, "utf8");
    } catch (err) {
        throw new CurveFormatError(`${path}: ${(err as Error).message}`);
    }
    return parseCurveCsv(text, panel, path);
}

export interface Maximum {
    x: number;
    value: number;
    index: number;
}

export function findMaximum(curve: CurveFile): Maximum {
    let best = 0;
    for (let i = 1; i < curve.rows.length; i++) {
        if (curve.rows[i].value > curve.rows[best].value) {
            best = i;
        }
    }
    return { x: curve.rows[best].x, value: curve.rows[best].value, index: best };
}

export function findMinimum(curve: CurveFile): Maximum {
    let best = 0;
    for (let i = 1; i < curve.rows.length; i++) {
        if (curve.rows[i].value < curve.rows[best].value) {
            best = i;
        }
    }
    return { x: curve.rows[best].x, value: curve.rows[best].value, index: best };
}
