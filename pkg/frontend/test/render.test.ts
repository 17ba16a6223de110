import { mkdtempSync, readFileSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

import { describe, expect, it } from "vitest";

import { main, render } from "../src/cli";
import { parseCurveCsv } from "../src/csv";
import { renderFigure } from "../src/plot";

function fakeSingle(): string {
    const rows = ["beta,value"];
    for (let i = 0; i <= 28; i++) {
        const beta = 0.6 + (0.28 * i) / 28;
        rows.push(`${beta},${0.85 + 0.2 * (beta - 0.6)}`);
    }
    return rows.join("\n") + "\n";
}

function fakeSplit(): string {
    const rows = ["beta1,beta2,value"];
    for (let i = 0; i <= 44; i++) {
        const b1 = 0.44 + (0.44 * i) / 44;
        rows.push(`${b1},${Math.max(0, 0.88 - b1)},${0.916 - 0.1 * (b1 - 0.44)}`);
    }
    return rows.join("\n") + "\n";
}

describe("renderFigure", () => {
    it("produces svg with annotated maxima recomputed from the rows", () => {
        const figure = renderFigure([
            parseCurveCsv(fakeSingle(), "single"),
            parseCurveCsv(fakeSplit(), "split"),
        ]);
        expect(figure.svg).toContain("<svg");
        expect(figure.svg).toContain("polyline");
        expect(figure.svg).toContain("max (0.8800,");
        expect(figure.svg).toContain("max (0.4400,");
        // png signature
        expect([...figure.png.subarray(0, 4)]).toEqual([137, 80, 78, 71]);
    });
});

describe("cli", () => {
    it("writes both variants and reports the extrema", () => {
        const dir = mkdtempSync(join(tmpdir(), "hgfig-"));
        const single = join(dir, "single.csv");
        const split = join(dir, "split.csv");
        writeFileSync(single, fakeSingle());
        writeFileSync(split, fakeSplit());
        const result = render(single, split, join(dir, "fig"));
        const svg = readFileSync(result.svgPath, "utf8");
        expect(svg).toContain("single-node bound");
        expect(svg).toContain("two-children bound");
        const png = readFileSync(result.pngPath);
        expect(png.length).toBeGreaterThan(1000);
        expect([...png.subarray(0, 8)]).toEqual([137, 80, 78, 71, 13, 10, 26, 10]);
        expect(result.panels[0].x).toBeCloseTo(0.88, 6);
        expect(result.panels[1].x).toBeCloseTo(0.44, 6);
    });

    it("fails with a nonzero exit on an empty csv", () => {
        const dir = mkdtempSync(join(tmpdir(), "hgfig-"));
        const empty = join(dir, "empty.csv");
        writeFileSync(empty, "");
        const split = join(dir, "split.csv");
        writeFileSync(split, fakeSplit());
        const code = main([
            "render", "--single", empty, "--split", split, "--out", join(dir, "fig"),
        ]);
        expect(code).toBe(1);
    });

    it("rejects missing flags with usage exit code", () => {
        expect(main(["render", "--single", "x.csv"])).toBe(2);
        expect(main(["draw"])).toBe(2);
    });
});
