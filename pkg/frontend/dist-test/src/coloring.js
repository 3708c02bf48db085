/**
 * Client-side black-index sets, exact to arbitrary size via BigInt.
 *
 * Token height m is black when m lies in S. The four set flavors and their
 * spec grammar mirror the service: modular:3, beatty:(1+1*sqrt(2))/1,
 * rational:5/2, explicit:2,5,9. Beatty membership runs on exact integer
 * square roots, never floating point, so the client and server can never
 * drift apart on large heaps.
 */
/** Floor of sqrt(m) for nonnegative bigints: Newton plus exact correction. */
export function isqrt(m) {
    if (m < 0n)
        throw new RangeError('isqrt of a negative number');
    if (m < 2n)
        return m;
    const bits = m.toString(2).length;
    let x = 1n << BigInt((bits + 1) >> 1);
    for (;;) {
        const y = (x + m / x) >> 1n;
        if (y >= x)
            break;
        x = y;
    }
    while (x * x > m)
        x -= 1n;
    while ((x + 1n) * (x + 1n) <= m)
        x += 1n;
    return x;
}
function gcd(a, b) {
    a = a < 0n ? -a : a;
    b = b < 0n ? -b : b;
    while (b)
        [a, b] = [b, a % b];
    return a;
}
export function normalizeQuadratic(p, q, d, r) {
    if (r === 0n)
        throw new Error('zero denominator');
    const s = isqrt(d);
    if (d < 2n || s * s === d)
        throw new Error('d must be a nonsquare integer >= 2');
    if (r < 0n) {
        p = -p;
        q = -q;
        r = -r;
    }
    const g = gcd(gcd(p, q), r);
    return { p: p / g, q: q / g, d, r: r / g };
}
const QI_RE = /^\(\s*(-?\d+)\s*([+-])\s*(\d+)\s*\*\s*sqrt\(\s*(\d+)\s*\)\s*\)\s*\/\s*(-?\d+)$/;
export function parseQuadratic(text) {
    const m = QI_RE.exec(text.trim());
    if (!m)
        throw new Error(`bad quadratic literal: ${text}`);
    const q = m[2] === '+' ? BigInt(m[3]) : -BigInt(m[3]);
    return normalizeQuadratic(BigInt(m[1]), q, BigInt(m[4]), BigInt(m[5]));
}
/** Exact floor(n * x) for n >= 0 and positive x. */
export function floorTimes(x, n) {
    if (n < 0n)
        throw new RangeError('n must be nonnegative');
    if (n === 0n)
        return 0n;
    if (x.q === 0n) {
        const num = n * x.p;
        // value is positive in every use here, so truncation equals floor
        return num >= 0n ? num / x.r : -((-num + x.r - 1n) / x.r);
    }
    const s = isqrt(n * n * x.q * x.q * x.d);
    const num = x.q > 0n ? n * x.p + s : n * x.p - s - 1n;
    return num >= 0n ? num / x.r : -((-num + x.r - 1n) / x.r);
}
/** Exact 1/x by conjugate rationalization. */
export function reciprocal(x) {
    const den = x.p * x.p - x.q * x.q * x.d;
    if (den === 0n && x.p === 0n)
        throw new Error('reciprocal of zero');
    return normalizeQuadratic(x.r * x.p, -x.r * x.q, x.d, den);
}
export function parseColoring(text) {
    const idx = text.indexOf(':');
    if (idx < 0)
        throw new Error(`bad coloring spec: ${text}`);
    const kind = text.slice(0, idx).trim().toLowerCase();
    const payload = text.slice(idx + 1).trim();
    switch (kind) {
        case 'modular': {
            const beta = BigInt(payload);
            if (beta < 2n)
                throw new Error('modular coloring needs beta >= 2');
            return { kind: 'modular', beta };
        }
        case 'beatty': {
            const b = parseQuadratic(payload);
            if (b.q === 0n)
                throw new Error('beatty coloring needs an irrational beta');
            return { kind: 'beatty', ...b };
        }
        case 'rational': {
            const [num, den] = payload.split('/');
            if (!num || !den)
                throw new Error(`bad rational coloring: ${payload}`);
            return { kind: 'rational', num: BigInt(num), den: BigInt(den) };
        }
        case 'explicit': {
            const members = new Set(payload
                .split(',')
                .filter((v) => v.trim() !== '')
                .map((v) => Number(v)));
            return { kind: 'explicit', members };
        }
        default:
            throw new Error(`unknown coloring kind: ${kind}`);
    }
}
/** Is the token at height m black? (m >= 1) */
export function isBlackToken(s, m) {
    if (m < 1)
        throw new RangeError('token height must be positive');
    const mb = BigInt(m);
    switch (s.kind) {
        case 'modular':
            return mb % s.beta === 0n;
        case 'beatty': {
            const inv = reciprocal(s);
            return floorTimes(inv, mb + 1n) > floorTimes(inv, mb);
        }
        case 'rational': {
            // count form survives the exact-multiple boundary, unlike plain floors
            const { num, den } = s;
            return ((mb + 1n) * den - 1n) / num > (mb * den - 1n) / num;
        }
        case 'explicit':
            return s.members.has(m);
    }
}
/** A heap shows black when its top token is black or it is empty. */
export function isBlackHeap(s, size) {
    return size === 0 || isBlackToken(s, size);
}
/** At least one heap must show black for a position to be legal. */
export function positionIsLegal(s, sizes) {
    return sizes.some((v) => isBlackHeap(s, v));
}
//# sourceMappingURL=coloring.js.map