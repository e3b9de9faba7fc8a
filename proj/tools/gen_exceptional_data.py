#!/usr/bin/env python3
"""Regenerate data/G2.json and data/F4.json.

Group-side data (unipotent class sizes, closure order, class totals of the
principal-series unipotent characters) is rebuilt from the Weyl group alone:

  * Omega[i][j] = |G|/|W| sum_w chi_i(w) chi_j(w) / det(q - w) is factored as
    P^T Lambda P with P block-unitriangular, one block per unipotent class,
    blocks given by the Springer correspondence (trivial local system first).
  * S[E][C] = q^{d_E} sum_{k in block C} P[k][E] Lambda[k][(C,1)] is the class
    total of the almost character R_E; the Fourier matrix of each family turns
    almost characters into unipotent characters.

The Springer blocks and the family slot assignments are the only inputs that
are not computed here.  The resulting tables are checked against the known
minimal-class tables by the C++ acceptance suite.

Runs in well under a minute; needs numpy and sympy.
"""
import argparse
import itertools
import json
import os
import sys
from collections import Counter, deque
from fractions import Fraction as Fr

import numpy as np
import sympy as sp

q = sp.symbols("q")

CARTAN = {
    "G2": [[2, -1], [-3, 2]],
    "F4": [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -2, 2, -1], [0, 0, -1, 2]],
}

# Springer blocks in the standard row order (classes by dimension).  First key of each block
# carries the trivial local system.  dim is the class dimension.
SPRINGER = {
    "G2": [
        ("1", 0, ["1_6"]),
        ("A1", 6, ["1_3[1]"]),
        ("A~1", 8, ["2_2"]),
        ("G2(a1)", 10, ["2_1", "1_3[-1]"]),
        ("G2", 12, ["1_0"]),
    ],
    "F4": [
        ("1", 0, ["1_24"]),
        ("A1", 16, ["2_16[0]"]),
        ("A~1", 22, ["4_13", "2_16[-2]"]),
        ("A1+A~1", 28, ["9_10"]),
        ("A~2", 30, ["8_9[-4]"]),
        ("A2", 30, ["8_9[0]", "1_12[1]"]),
        ("A2+A~1", 34, ["4_7[2]"]),
        ("A~2+A1", 36, ["6_6[0,2]"]),
        ("B2", 36, ["9_6[3]", "4_8"]),
        ("C3(a1)", 38, ["16_5", "4_7[-2]"]),
        ("F4(a3)", 40, ["12_4", "9_6[-3]", "6_6[0,-2]", "1_12[-1]"]),
        ("C3", 42, ["8_3[0]"]),
        ("B3", 42, ["8_3[4]"]),
        ("F4(a2)", 44, ["9_2", "2_4[2]"]),
        ("F4(a1)", 46, ["4_1", "2_4[0]"]),
        ("F4", 48, ["1_0"]),
    ],
}

# Families: (group S_n, {irrep key: slot of the Fourier matrix of M(S_n)}).
FAMILIES = {
    "G2": [(3, {"2_1": 0, "1_3[-1]": 2, "2_2": 3, "1_3[1]": 5})],
    "F4": [
        (2, {"4_1": 0, "2_4[0]": 1, "2_4[2]": 2}),
        (2, {"4_13": 0, "2_16[-2]": 1, "2_16[0]": 2}),
        (4, {"12_4": 0, "6_6[0,-2]": 2, "9_6[-3]": 3, "1_12[-1]": 4,
             "16_5": 5, "4_7[-2]": 6, "6_6[0,2]": 9, "9_6[3]": 12,
             "4_8": 13, "1_12[1]": 14, "4_7[2]": 17}),
    ],
}


# ---------------------------------------------------------------- Weyl group

def weyl_group(cartan):
    r = len(cartan)
    gens = []
    for i in range(r):
        m = np.eye(r, dtype=np.int64)
        for j in range(r):
            m[i, j] -= cartan[i][j]
        gens.append(m)
    roots = set()
    todo = deque()
    for i in range(r):
        e = tuple(int(i == k) for k in range(r))
        roots.add(e)
        todo.append(e)
    while todo:
        a = todo.popleft()
        for g in gens:
            b = tuple(int(x) for x in g @ np.array(a))
            if b not in roots:
                roots.add(b)
                todo.append(b)
    pos = np.array(sorted(a for a in roots if min(a) >= 0)).T
    ident = np.eye(r, dtype=np.int64)
    elems = {ident.tobytes(): ident}
    order = [ident]
    todo = deque([ident])
    while todo:
        m = todo.popleft()
        for g in gens:
            n = g @ m
            if n.tobytes() not in elems:
                elems[n.tobytes()] = n
                order.append(n)
                todo.append(n)
    lengths = [int(np.sum(np.any(m @ pos < 0, axis=0))) for m in order]
    return gens, pos, order, lengths


def conjugacy_classes(gens, elems):
    idx = {m.tobytes(): i for i, m in enumerate(elems)}
    cls = [-1] * len(elems)
    reps = []
    for i in range(len(elems)):
        if cls[i] >= 0:
            continue
        c = len(reps)
        reps.append(i)
        cls[i] = c
        stack = [i]
        while stack:
            m = elems[stack.pop()]
            for g in gens:
                k = idx[(g @ m @ g).tobytes()]
                if cls[k] < 0:
                    cls[k] = c
                    stack.append(k)
    return idx, cls, reps


def character_table(elems, idx, cls, reps):
    """Burnside's method on class sums, numerically, then rounded and checked."""
    n = len(elems)
    r = len(reps)
    sizes = [cls.count(c) for c in range(r)]
    byc = [[i for i in range(n) if cls[i] == c] for c in range(r)]
    inv = [idx[np.round(np.linalg.inv(m)).astype(np.int64).tobytes()] for m in elems]
    consts = np.zeros((r, r, r))
    for j in range(r):
        for k in range(r):
            z = elems[reps[k]]
            for x in byc[j]:
                consts[j][cls[idx[(elems[inv[x]] @ z).tobytes()]]][k] += 1
    rng = np.random.default_rng(1)
    mix = sum(rng.normal() * consts[j] for j in range(r))
    _, vecs = np.linalg.eig(mix)
    table = []
    for c in range(r):
        v = np.real(vecs[:, c])
        v = v / v[0]
        d = np.sqrt(n / sum(v[k] ** 2 / sizes[k] for k in range(r)))
        table.append([int(round(v[k] * d / sizes[k])) for k in range(r)])
    for i in range(r):
        for j in range(r):
            s = sum(sizes[c] * table[i][c] * table[j][c] for c in range(r))
            assert s == (n if i == j else 0), "character table failed orthogonality"
    return sizes, table


def degrees_from_lengths(lengths):
    poly = sp.Poly(sum(q ** l for l in lengths), q)
    degs = []
    for d in range(30, 1, -1):
        f = sp.Poly(sum(q ** k for k in range(d)), q)
        while poly.degree() >= f.degree():
            quo, rem = sp.div(poly, f)
            if not rem.is_zero:
                break
            degs.append(d)
            poly = quo
    assert poly.degree() == 0
    return sorted(degs)


# ---------------------------------------------------------------- Fourier

def _perm_mul(a, b):
    return tuple(a[b[i]] for i in range(len(a)))


def _perm_inv(a):
    r = [0] * len(a)
    for i, x in enumerate(a):
        r[x] = i
    return tuple(r)


def _small_table(group):
    idx = {h: i for i, h in enumerate(group)}
    cls = [-1] * len(group)
    reps = []
    for i, h in enumerate(group):
        if cls[i] >= 0:
            continue
        c = len(reps)
        reps.append(h)
        for g in group:
            cls[idx[_perm_mul(_perm_mul(g, h), _perm_inv(g))]] = c
    r = len(reps)
    sizes = [cls.count(c) for c in range(r)]
    byc = [[group[i] for i in range(len(group)) if cls[i] == c] for c in range(r)]
    consts = np.zeros((r, r, r))
    for j in range(r):
        for k in range(r):
            for x in byc[j]:
                consts[j][cls[idx[_perm_mul(_perm_inv(x), reps[k])]]][k] += 1
    rng = np.random.default_rng(7)
    mix = sum(rng.normal() * consts[j] for j in range(r))
    _, vecs = np.linalg.eig(mix)
    chars = []
    for c in range(r):
        v = vecs[:, c] / vecs[0, c]
        s = sum(abs(v[k]) ** 2 / sizes[k] for k in range(r))
        d = round(np.sqrt(len(group) / s.real))
        chars.append([v[k] * d / sizes[k] for k in range(r)])
    chars.sort(key=lambda ch: (round(ch[0].real), [-round(x.real, 6) for x in ch]))
    return (lambda h, ci: chars[ci][cls[idx[h]]]), len(chars)


def fourier_matrix(n):
    """Lusztig's pairing on M(S_n), rows and columns indexed by (x, sigma)."""
    group = [tuple(p) for p in itertools.permutations(range(n))]
    reps, seen = [], set()
    for g in group:
        if g in seen:
            continue
        reps.append(g)
        for h in group:
            seen.add(_perm_mul(_perm_mul(h, g), _perm_inv(h)))
    reps.sort(key=lambda g: (sum(1 for i in range(n) if g[i] != i), g))
    labels, cent, tab = [], {}, {}
    for x in reps:
        cent[x] = [g for g in group if _perm_mul(g, x) == _perm_mul(x, g)]
        tab[x] = _small_table(cent[x])
        labels += [(x, ci) for ci in range(tab[x][1])]
    m = len(labels)
    f = [[Fr(0)] * m for _ in range(m)]
    for a, (x, si) in enumerate(labels):
        for b, (y, ti) in enumerate(labels):
            s = 0
            for g in group:
                yy = _perm_mul(_perm_mul(g, y), _perm_inv(g))
                if _perm_mul(x, yy) == _perm_mul(yy, x):
                    xx = _perm_mul(_perm_mul(_perm_inv(g), x), g)
                    s += tab[x][0](yy, si) * np.conj(tab[y][0](xx, ti))
            val = s / (len(cent[x]) * len(cent[y]))
            assert abs(val.imag) < 1e-9
            f[a][b] = Fr(val.real).limit_denominator(1000)
    return f


# ---------------------------------------------------------------- exact helpers

def matinv(m):
    k = len(m)
    a = [row[:] + [Fr(int(i == j)) for j in range(k)] for i, row in enumerate(m)]
    for c in range(k):
        p = next(r for r in range(c, k) if a[r][c] != 0)
        a[c], a[p] = a[p], a[c]
        pv = a[c][c]
        a[c] = [x / pv for x in a[c]]
        for r in range(k):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [row[k:] for row in a]


def block_ldl(om, blocks):
    """om = P^T Lambda P with P identity on diagonal blocks, zero above."""
    low, lam = {}, {}
    for bi, b in enumerate(blocks):
        done = blocks[:bi]

        def reduced(x, y):
            return om[x][y] - sum(low[(x, cx)] * lam[(cx, cy)] * low[(y, cy)]
                                  for c in done for cx in c for cy in c)

        m = [[reduced(x, y) for y in b] for x in b]
        for i, x in enumerate(b):
            for j, y in enumerate(b):
                lam[(x, y)] = m[i][j]
        mi = matinv(m)
        for later in blocks[bi + 1:]:
            for x in later:
                row = [reduced(x, y) for y in b]
                for j, y in enumerate(b):
                    low[(x, y)] = sum(row[k] * mi[k][j] for k in range(len(b)))
        for x in b:
            for y in b:
                low[(x, y)] = Fr(int(x == y))
    return low, lam


def interpolate(xs, ys):
    """Coefficients (lowest first) of the polynomial through the points."""
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = [Fr(0)]
    for i in range(n - 1, -1, -1):
        # poly = poly * (x - xs[i]) + coef[i]
        nxt = [Fr(0)] * (len(poly) + 1)
        for k, c in enumerate(poly):
            nxt[k + 1] += c
            nxt[k] -= c * xs[i]
        nxt[0] += coef[i]
        poly = nxt
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return poly


def peval(p, x):
    s = Fr(0)
    for c in reversed(p):
        s = s * x + c
    return s


def encode(p):
    if len(p) == 1 and p[0] == 0:
        return []
    return [int(c) if c.denominator == 1 else f"{c.numerator}/{c.denominator}" for c in p]


# ---------------------------------------------------------------- main pipeline

def build(tname):
    cartan = CARTAN[tname]
    rank = len(cartan)
    gens, pos, elems, lengths = weyl_group(cartan)
    nw = len(elems)
    npos = pos.shape[1]
    idx, cls, reps = conjugacy_classes(gens, elems)
    sizes, table = character_table(elems, idx, cls, reps)
    r = len(reps)
    degs = degrees_from_lengths(lengths)

    charpolys = [[int(c) for c in reversed(sp.Matrix(elems[i]).charpoly(q).all_coeffs())] for i in reps]
    det1 = [sp.expand(sp.Matrix(sp.eye(rank) - q * sp.Matrix(elems[i])).det()) for i in reps]
    prod_deg = sp.prod([1 - q ** d for d in degs])
    bval = []
    for ch in table:
        s = sum(sp.Rational(sizes[c] * ch[c], nw) / det1[c] for c in range(r))
        fake = sp.Poly(sp.cancel(s * prod_deg), q)
        bval.append(min(m[0] for m in fake.monoms()))

    def cls_of(word):
        m = np.eye(rank, dtype=np.int64)
        for i in word:
            m = m @ gens[i]
        return cls[idx[m.tobytes()]]

    c1, c2 = cls_of([0]), cls_of([0, rank - 1])
    by_db = Counter((ch[0], bval[i]) for i, ch in enumerate(table))
    by_dbv = Counter((ch[0], bval[i], ch[c1]) for i, ch in enumerate(table))
    keys = []
    for i, ch in enumerate(table):
        k = f"{ch[0]}_{bval[i]}"
        if by_db[(ch[0], bval[i])] > 1:
            k += f"[{ch[c1]}"
            if by_dbv[(ch[0], bval[i], ch[c1])] > 1:
                k += f",{ch[c2]}"
            k += "]"
        keys.append(k)
    assert len(set(keys)) == r
    kidx = {k: i for i, k in enumerate(keys)}

    spr = SPRINGER[tname]
    assert sorted(k for _, _, b in spr for k in b) == sorted(keys)
    blocks = [[kidx[k] for k in b] for _, _, b in spr]
    # factorisation order: ascending class dimension
    order = sorted(range(len(spr)), key=lambda c: spr[c][1])
    ldl_blocks = [blocks[c] for c in order]
    shift = {}
    for (_, dim, _), b in zip(spr, blocks):
        for e in b:
            shift[e] = npos - dim // 2

    fam_of = {}
    for n, slots in FAMILIES[tname]:
        f = fourier_matrix(n)
        members = [kidx[k] for k in slots]
        for k, s in slots.items():
            fam_of[kidx[k]] = (members, {kidx[kk]: f[s][ss] for kk, ss in slots.items()})

    def g_order(x):
        v = Fr(x) ** npos
        for d in degs:
            v *= Fr(x) ** d - 1
        return v

    def totals_at(x):
        cp = [sum(c * x ** i for i, c in enumerate(p)) for p in charpolys]
        go = g_order(x)
        om = [[go / nw * sum(Fr(sizes[c] * table[i][c] * table[j][c], cp[c]) for c in range(r))
               / Fr(x) ** (shift[i] + shift[j]) for j in range(r)] for i in range(r)]
        low, lam = block_ldl(om, ldl_blocks)
        almost = {}
        for c, b in enumerate(blocks):
            for e in range(r):
                almost[(e, c)] = Fr(x) ** shift[e] * sum(low.get((e, k), 0) * lam[(k, b[0])] for k in b)
        tot = {}
        for e in range(r):
            for c in range(len(blocks)):
                if e in fam_of:
                    members, row = fam_of[e]
                    tot[(e, c)] = sum(row[m] * almost[(m, c)] for m in members)
                else:
                    tot[(e, c)] = almost[(e, c)]
        closure = {(a, b): low.get((blocks[b][0], blocks[a][0]), 0) != 0
                   for a in range(len(blocks)) for b in range(len(blocks))}
        return tot, closure

    npts = 3 * npos + 3
    xs = list(range(2, 2 + npts + 3))
    samples = {}
    closure = None
    for x in xs:
        tot, cl = totals_at(x)
        samples[x] = tot
        if closure is None:
            closure = cl
    values = {}
    for key in samples[xs[0]]:
        poly = interpolate([Fr(x) for x in xs[:npts]], [samples[x][key] for x in xs[:npts]])
        for x in xs[npts:]:
            assert peval(poly, x) == samples[x][key], "degree bound exceeded"
        values[key] = poly

    nc = len(blocks)
    triv = kidx["1_0"]
    total = [Fr(0)]
    for c in range(nc):
        p = values[(triv, c)]
        total = [ (total[i] if i < len(total) else 0) + (p[i] if i < len(p) else 0)
                  for i in range(max(len(total), len(p)))]
    assert total == [0] * (2 * npos) + [1], "class sizes do not sum to q^{2N}"

    irreps = []
    unit = next(c for c in range(nc) if spr[c][0] == "1")
    for e in range(r):
        p = values[(e, unit)]
        a = next(i for i, c in enumerate(p) if c != 0)
        irreps.append({"key": keys[e], "dim": table[e][0], "b": bval[e], "a": a, "A": len(p) - 1})

    # closure: a <= b when P pairs the trivial systems of b above a
    le = [[a == b or (spr[a][1] < spr[b][1] and closure[(a, b)]) for b in range(nc)] for a in range(nc)]
    hasse = []
    for a in range(nc):
        for b in range(nc):
            if a != b and le[a][b] and not any(c not in (a, b) and le[a][c] and le[c][b] for c in range(nc)):
                hasse.append([spr[a][0], spr[b][0]])

    return {
        "type": tname,
        "schema_version": 1,
        "irreps": irreps,
        "classes": [{"label": lab, "dim": dim, "size": encode(values[(triv, c)])}
                    for c, (lab, dim, _) in enumerate(spr)],
        "hasse": hasse,
        "values": [[encode(values[(e, c)]) for c in range(nc)] for e in range(r)],
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default=os.path.join(os.path.dirname(__file__), "..", "data"))
    ap.add_argument("types", nargs="*", default=["G2", "F4"])
    args = ap.parse_args()
    for t in args.types:
        doc = build(t)
        path = os.path.join(args.out, f"{t}.json")
        old = {}
        if os.path.exists(path):
            with open(path) as fh:
                old = json.load(fh)
        for extra in ("hecke",):
            if extra in old:
                doc[extra] = old[extra]
        with open(path, "w") as fh:
            json.dump(doc, fh, indent=1)
            fh.write("\n")
        print(f"wrote {path}", file=sys.stderr)


if __name__ == "__main__":
    main()
