import { GLYPH_HEIGHT, GLYPH_SPACING, GLYPH_WIDTH, glyphRows } from "./font";
import { encodePng } from "./png";

export type Color = [number, number, number];

export class Raster {
    readonly width: number;
    readonly height: number;
    readonly data: Uint8Array;

    constructor(width: number, height: number, background: Color = [255, 255, 255]) {
        this.width = width;
        this.height = height;
        this.data = new Uint8Array(width * height * 4);
        for (let i = 0; i < width * height; i++) {
            this.data.set([...background, 255], i * 4);
        }
    }

    set(x: number, y: number, color: Color): void {
        x = Math.round(x);
        y = Math.round(y);
        if (x < 0 || y < 0 || x >= this.width || y >= this.height) return;
        this.data.set([...color, 255], (y * this.width + x) * 4);
    }

    fillRect(x: number, y: number, w: number, h: number, color: Color): void {
        for (let yy = y; yy < y + h; yy++) {
            for (let xx = x; xx < x + w; xx++) {
                this.set(xx, yy, color);
            }
        }
    }

    line(x0: number, y0: number, x1: number, y1: number, color: Color, thickness = 1): void {
        const steps = Math.max(Math.abs(x1 - x0), Math.abs(y1 - y0), 1);
        for (let i = 0; i <= steps; i++) {
            const x = x0 + ((x1 - x0) * i) / steps;
            const y = y0 + ((y1 - y0) * i) / steps;
            if (thickness <= 1) {
                this.set(x, y, color);
            } else {
                const r = thickness / 2;
                for (let dy = -r; dy <= r; dy++) {
                    for (let dx = -r; dx <= r; dx++) {
                        if (dx * dx + dy * dy <= r * r) this.set(x + dx, y + dy, color);
                    }
                }
            }
        }
    }

    disc(cx: number, cy: number, radius: number, color: Color): void {
        for (let dy = -radius; dy <= radius; dy++) {
            for (let dx = -radius; dx <= radius; dx++) {
                if (dx * dx + dy * dy <= radius * radius) this.set(cx + dx, cy + dy, color);
            }
        }
    }

    text(x: number, y: number, content: string, color: Color, scale = 1): void {
        let cursor = Math.round(x);
        for (const ch of content) {
            const rows = glyphRows(ch);
            for (let r = 0; r < GLYPH_HEIGHT; r++) {
                for (let c = 0; c < GLYPH_WIDTH; c++) {
                    if (rows[r][c] === "#") {
                        this.fillRect(cursor + c * scale, Math.round(y) + r * scale, scale, scale, color);
                    }
                }
            }
            cursor += (GLYPH_WIDTH + GLYPH_SPACING) * scale;
        }
    }

    toPng(): Buffer {
        return encodePng(this.width, this.height, this.data);
    }
}
