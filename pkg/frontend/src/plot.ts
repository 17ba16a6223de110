import { CurveFile, findMaximum, findMinimum, Maximum } from "./csv";
import { Raster } from "./raster";
import { textWidth } from "./font";

export interface PanelSpec {
    curve: CurveFile;
    title: string;
    xLabel: string;
    yLabel: string;
    highlight: Maximum;
    highlightKind: "max" | "min";
}

export const PANEL_WIDTH = 480;
export const PANEL_HEIGHT = 380;
const MARGIN = { left: 78, right: 24, top: 44, bottom: 56 };

const AXIS: [number, number, number] = [40, 40, 40];
const CURVE: [number, number, number] = [24, 90, 189];
const MARK: [number, number, number] = [202, 52, 32];
const GRID: [number, number, number] = [220, 220, 220];

export function panelFor(curve: CurveFile): PanelSpec {
    if (curve.panel === "single") {
        return {
            curve,
            title: "single-node bound",
            xLabel: "beta",
            yLabel: "bound",
            highlight: findMaximum(curve),
            highlightKind: "max",
        };
    }
    if (curve.panel === "split") {
        return {
            curve,
            title: "two-children bound",
            xLabel: "beta1",
            yLabel: "bound",
            highlight: findMaximum(curve),
            highlightKind: "max",
        };
    }
    return {
        curve,
        title: "cut ratio curve",
        xLabel: "rho",
        yLabel: "ratio",
        highlight: findMinimum(curve),
        highlightKind: "min",
    };
}

interface Scale {
    x(v: number): number;
    y(v: number): number;
    xTicks: number[];
    yTicks: number[];
}

function makeScale(spec: PanelSpec): Scale {
    const rows = spec.curve.rows;
    const xMin = rows[0].x;
    const xMax = rows[rows.length - 1].x;
    let yMin = Infinity;
    let yMax = -Infinity;
    for (const row of rows) {
        yMin = Math.min(yMin, row.value);
        yMax = Math.max(yMax, row.value);
    }
    const pad = Math.max((yMax - yMin) * 0.08, 1e-6);
    yMin -= pad;
    yMax += pad;
    const plotW = PANEL_WIDTH - MARGIN.left - MARGIN.right;
    const plotH = PANEL_HEIGHT - MARGIN.top - MARGIN.bottom;
    const ticks = (lo: number, hi: number, count: number) =>
        Array.from({ length: count }, (_, i) => lo + ((hi - lo) * i) / (count - 1));
    return {
        x: v => MARGIN.left + ((v - xMin) / (xMax - xMin)) * plotW,
        y: v => PANEL_HEIGHT - MARGIN.bottom - ((v - yMin) / (yMax - yMin)) * plotH,
        xTicks: ticks(xMin, xMax, 5),
        yTicks: ticks(yMin, yMax, 5),
    };
}

function annotation(spec: PanelSpec): string {
    const kind = spec.highlightKind === "max" ? "max" : "min";
    return `${kind} (${spec.highlight.x.toFixed(4)}, ${spec.highlight.value.toFixed(4)})`;
}

export function drawPanelRaster(r: Raster, spec: PanelSpec, originX: number): void {
    const s = makeScale(spec);
    const left = originX + MARGIN.left;
    const right = originX + PANEL_WIDTH - MARGIN.right;
    const top = MARGIN.top;
    const bottom = PANEL_HEIGHT - MARGIN.bottom;

    for (const t of s.yTicks) {
        r.line(left, s.y(t), right, s.y(t), GRID);
        const label = t.toFixed(3);
        r.text(left - textWidth(label) - 8, s.y(t) - 3, label, AXIS);
    }
    for (const t of s.xTicks) {
        const x = originX + s.x(t);
        r.line(x, bottom, x, bottom + 4, AXIS);
        const label = t.toFixed(2);
        r.text(x - textWidth(label) / 2, bottom + 8, label, AXIS);
    }
    r.line(left, top, left, bottom, AXIS);
    r.line(left, bottom, right, bottom, AXIS);

    const rows = spec.curve.rows;
    for (let i = 1; i < rows.length; i++) {
        r.line(
            originX + s.x(rows[i - 1].x), s.y(rows[i - 1].value),
            originX + s.x(rows[i].x), s.y(rows[i].value),
            CURVE, 2,
        );
    }

    const hx = originX + s.x(spec.highlight.x);
    const hy = s.y(spec.highlight.value);
    r.disc(hx, hy, 4, MARK);
    const note = annotation(spec);
    const noteX = Math.min(Math.max(hx - textWidth(note, 2) / 2, left + 2), right - textWidth(note, 2) - 2);
    const noteY = hy > top + 40 ? hy - 28 : hy + 12;
    r.text(noteX, noteY, note, MARK, 2);

    r.text(originX + (PANEL_WIDTH - textWidth(spec.title, 2)) / 2, 12, spec.title, AXIS, 2);
    r.text(
        originX + (PANEL_WIDTH - textWidth(spec.xLabel, 2)) / 2,
        PANEL_HEIGHT - 20, spec.xLabel, AXIS, 2,
    );
    r.text(originX + 6, top - 16, spec.yLabel, AXIS, 1);
}

export function drawPanelSvg(spec: PanelSpec, originX: number): string {
    const s = makeScale(spec);
    const left = originX + MARGIN.left;
    const right = originX + PANEL_WIDTH - MARGIN.right;
    const top = MARGIN.top;
    const bottom = PANEL_HEIGHT - MARGIN.bottom;
    const rgb = (c: [number, number, number]) => `rgb(${c[0]},${c[1]},${c[2]})`;
    const parts: string[] = [];

    for (const t of s.yTicks) {
        parts.push(`<line x1="${left}" y1="${s.y(t).toFixed(2)}" x2="${right}" y2="${s.y(t).toFixed(2)}" stroke="${rgb(GRID)}"/>`);
        parts.push(`<text x="${left - 8}" y="${(s.y(t) + 4).toFixed(2)}" text-anchor="end" font-size="12">${t.toFixed(3)}</text>`);
    }
    for (const t of s.xTicks) {
        const x = originX + s.x(t);
        parts.push(`<line x1="${x.toFixed(2)}" y1="${bottom}" x2="${x.toFixed(2)}" y2="${bottom + 4}" stroke="${rgb(AXIS)}"/>`);
        parts.push(`<text x="${x.toFixed(2)}" y="${bottom + 18}" text-anchor="middle" font-size="12">${t.toFixed(2)}</text>`);
    }
    parts.push(`<line x1="${left}" y1="${top}" x2="${left}" y2="${bottom}" stroke="${rgb(AXIS)}"/>`);
    parts.push(`<line x1="${left}" y1="${bottom}" x2="${right}" y2="${bottom}" stroke="${rgb(AXIS)}"/>`);

    const points = spec.curve.rows
        .map(row => `${(originX + s.x(row.x)).toFixed(2)},${s.y(row.value).toFixed(2)}`)
        .join(" ");
    parts.push(`<polyline points="${points}" fill="none" stroke="${rgb(CURVE)}" stroke-width="2"/>`);

    const hx = originX + s.x(spec.highlight.x);
    const hy = s.y(spec.highlight.value);
    parts.push(`<circle cx="${hx.toFixed(2)}" cy="${hy.toFixed(2)}" r="4" fill="${rgb(MARK)}"/>`);
    const noteY = hy > top + 40 ? hy - 12 : hy + 18;
    parts.push(`<text x="${hx.toFixed(2)}" y="${noteY.toFixed(2)}" text-anchor="middle" font-size="14" fill="${rgb(MARK)}">${annotation(spec)}</text>`);

    parts.push(`<text x="${originX + PANEL_WIDTH / 2}" y="24" text-anchor="middle" font-size="16">${spec.title}</text>`);
    parts.push(`<text x="${originX + PANEL_WIDTH / 2}" y="${PANEL_HEIGHT - 10}" text-anchor="middle" font-size="14">${spec.xLabel}</text>`);
    parts.push(`<text x="${originX + 10}" y="${top - 10}" font-size="12">${spec.yLabel}</text>`);
    return parts.join("\n");
}

export interface FigureOutput {
    svg: string;
    png: Buffer;
    panels: PanelSpec[];
}

export function renderFigure(curves: CurveFile[]): FigureOutput {
    if (curves.length === 0) {
        throw new Error("no curves to render");
    }
    const panels = curves.map(panelFor);
    const width = PANEL_WIDTH * panels.length;
    const raster = new Raster(width, PANEL_HEIGHT);
    const svgParts: string[] = [
        `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${PANEL_HEIGHT}" viewBox="0 0 ${width} ${PANEL_HEIGHT}" font-family="Menlo, Consolas, monospace">`,
        `<rect width="${width}" height="${PANEL_HEIGHT}" fill="white"/>`,
    ];
    panels.forEach((panel, i) => {
        drawPanelRaster(raster, panel, i * PANEL_WIDTH);
        svgParts.push(drawPanelSvg(panel, i * PANEL_WIDTH));
    });
    svgParts.push("</svg>");
    return { svg: svgParts.join("\n") + "\n", png: raster.toPng(), panels };
}
