import { writeFileSync } from "node:fs";
import { parseArgs } from "node:util";

import { CurveFile, CurveFormatError, readCurveCsv } from "./csv";
import { renderFigure } from "./plot";

export interface RenderResult {
    svgPath: string;
    pngPath: string;
    panels: { panel: string; x: number; value: number }[];
}

export function render(singlePath: string, splitPath: string, outBase: string,
                       gwPath?: string): RenderResult {
    const curves: CurveFile[] = [
        readCurveCsv(singlePath, "single"),
        readCurveCsv(splitPath, "split"),
    ];
    if (gwPath) {
        curves.push(readCurveCsv(gwPath, "gw"));
    }
    const figure = renderFigure(curves);
    const base = outBase.replace(/\.(svg|png)$/i, "");
    const svgPath = `${base}.svg`;
    const pngPath = `${base}.png`;
    writeFileSync(svgPath, figure.svg);
    writeFileSync(pngPath, figure.png);
    return {
        svgPath,
        pngPath,
        panels: figure.panels.map(p => ({
            panel: p.curve.panel,
            x: p.highlight.x,
            value: p.highlight.value,
        })),
    };
}

export function main(argv: string[]): number {
    if (argv[0] !== "render") {
        console.error("usage: render --single <csv> --split <csv> [--gw <csv>] --out <path>");
        return 2;
    }
    let parsed;
    try {
        parsed = parseArgs({
            args: argv.slice(1),
            options: {
                single: { type: "string" },
                split: { type: "string" },
                gw: { type: "string" },
                out: { type: "string" },
            },
        });
    } catch (err) {
        console.error((err as Error).message);
        return 2;
    }
    const { single, split, gw, out } = parsed.values;
    if (!single || !split || !out) {
        console.error("usage: render --single <csv> --split <csv> [--gw <csv>] --out <path>");
        return 2;
    }
    try {
        const result = render(single, split, out, gw);
        for (const panel of result.panels) {
            console.log(`${panel.panel} ${panel.x.toFixed(4)} ${panel.value.toFixed(4)}`);
        }
        console.log(`wrote ${result.svgPath} and ${result.pngPath}`);
        return 0;
    } catch (err) {
        if (err instanceof CurveFormatError) {
            console.error(`error: ${err.message}`);
            return 1;
        }
        throw err;
    }
}

if (require.main === module) {
    process.exit(main(process.argv.slice(2)));
}
