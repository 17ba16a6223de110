// 5x7 bitmap font for the raster output; '#' marks lit pixels.

const RAW: Record<string, string[]> = {
    "0": ["·###·", "#···#", "#··##", "#·#·#", "##··#", "#···#", "·###·"],
    "1": ["··#··", "·##··", "··#··", "··#··", "··#··", "··#··", "·###·"],
    "2": ["·###·", "#···#", "····#", "···#·", "··#··", "·#···", "#####"],
    "3": ["·###·", "#···#", "····#", "··##·", "····#", "#···#", "·###·"],
    "4": ["···#·", "··##·", "·#·#·", "#··#·", "#####", "···#·", "···#·"],
    "5": ["#####", "#····", "####·", "····#", "····#", "#···#", "·###·"],
    "6": ["·###·", "#····", "#····", "####·", "#···#", "#···#", "·###·"],
    "7": ["#####", "····#", "···#·", "··#··", "·#···", "·#···", "·#···"],
    "8": ["·###·", "#···#", "#···#", "·###·", "#···#", "#···#", "·###·"],
    "9": ["·###·", "#···#", "#···#", "·####", "····#", "····#", "·###·"],
    ".": ["·····", "·····", "·····", "·····", "·····", "·##··", "·##··"],
    ",": ["·····", "·····", "·····", "·····", "·##··", "·##··", "·#···"],
    "-": ["·····", "·····", "·····", "#####", "·····", "·····", "·····"],
    "=": ["·····", "·····", "#####", "·····", "#####", "·····", "·····"],
    "(": ["···#·", "··#··", "·#···", "·#···", "·#···", "··#··", "···#·"],
    ")": ["·#···", "··#··", "···#·", "···#·", "···#·", "··#··", "·#···"],
    ":": ["·····", "·##··", "·##··", "·····", "·##··", "·##··", "·····"],
    " ": ["·····", "·····", "·····", "·····", "·····", "·····", "·····"],
    a: ["·····", "·····", "·###·", "····#", "·####", "#···#", "·####"],
    b: ["#····", "#····", "####·", "#···#", "#···#", "#···#", "####·"],
    c: ["·····", "·····", "·####", "#····", "#····", "#····", "·####"],
    d: ["····#", "····#", "·####", "#···#", "#···#", "#···#", "·####"],
    e: ["·····", "·····", "·###·", "#···#", "#####", "#····", "·###·"],
    f: ["··##·", "·#···", "####·", "·#···", "·#···", "·#···", "·#···"],
    g: ["·····", "·####", "#···#", "#···#", "·####", "····#", "·###·"],
    h: ["#····", "#····", "####·", "#···#", "#···#", "#···#", "#···#"],
    i: ["··#··", "·····", "·##··", "··#··", "··#··", "··#··", "·###·"],
    j: ["···#·", "·····", "··##·", "···#·", "···#·", "#··#·", "·##··"],
    k: ["#····", "#····", "#··#·", "#·#··", "##···", "#·#··", "#··#·"],
    l: ["·##··", "··#··", "··#··", "··#··", "··#··", "··#··", "·###·"],
    m: ["·····", "·····", "##·#·", "#·#·#", "#·#·#", "#·#·#", "#·#·#"],
    n: ["·····", "·····", "####·", "#···#", "#···#", "#···#", "#···#"],
    o: ["·····", "·····", "·###·", "#···#", "#···#", "#···#", "·###·"],
    p: ["·····", "####·", "#···#", "#···#", "####·", "#····", "#····"],
    q: ["·····", "·####", "#···#", "#···#", "·####", "····#", "····#"],
    r: ["·····", "·····", "#·##·", "##···", "#····", "#····", "#····"],
    s: ["·····", "·····", "·####", "#····", "·###·", "····#", "####·"],
    t: ["·#···", "·#···", "####·", "·#···", "·#···", "·#···", "··##·"],
    u: ["·····", "·····", "#···#", "#···#", "#···#", "#···#", "·####"],
    v: ["·····", "·····", "#···#", "#···#", "#···#", "·#·#·", "··#··"],
    w: ["·····", "·····", "#·#·#", "#·#·#", "#·#·#", "#·#·#", "·#·#·"],
    x: ["·····", "·····", "#···#", "·#·#·", "··#··", "·#·#·", "#···#"],
    y: ["·····", "#···#", "#···#", "·####", "····#", "#···#", "·###·"],
    z: ["·····", "·····", "#####", "···#·", "··#··", "·#···", "#####"],
};

export const GLYPH_WIDTH = 5;
export const GLYPH_HEIGHT = 7;
export const GLYPH_SPACING = 1;

export function glyphRows(ch: string): string[] {
    return RAW[ch] ?? RAW["·"] ?? RAW[" "];
}

export function textWidth(text: string, scale = 1): number {
    return text.length * (GLYPH_WIDTH + GLYPH_SPACING) * scale;
}
