#!/usr/bin/env python3
"""Exporter for the shipped group corpus.

Builds each corpus group as a permutation group and writes one JSON dataset
per group: ordinary character table, power maps, per-prime Brauer data,
p-sections (centralizers, fusion, u-multiplication maps, block
correspondence), and subgroup embeddings used by the restriction checks.

Character tables are computed numerically with Burnside's algorithm and then
recovered exactly from eigenvalue multiplicities.  Brauer characters come from
the Fong-Swan candidate search (valid for p-solvable groups) with explicit
overrides for the remaining cases.  Block membership and Brauer
correspondents are computed by reducing central characters modulo a prime
ideal above p in the power basis of Z[zeta_N].

Usage: export_corpus.py OUTDIR
"""

import itertools
import json
import math
import sys
from fractions import Fraction
from functools import reduce

import numpy as np

# --------------------------------------------------------------------------
# permutation groups


def compose(a, b):
    """(a*b)(i) = a(b(i))."""
    return tuple(a[i] for i in b)


def inverse(a):
    inv = [0] * len(a)
    for i, x in enumerate(a):
        inv[x] = i
    return tuple(inv)


def closure(gens):
    ident = tuple(range(len(gens[0])))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(g, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen)


def elem_order(g):
    ident = tuple(range(len(g)))
    k, x = 1, g
    while x != ident:
        x = compose(g, x)
        k += 1
    return k


def power(g, k):
    ident = tuple(range(len(g)))
    result, base = ident, g
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


def prime_factors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def nu(n, p):
    a = 0
    while n % p == 0:
        n //= p
        a += 1
    return a


def lcm(a, b):
    return a * b // math.gcd(a, b)


class Group:
    def __init__(self, name, elements):
        self.name = name
        self.elements = sorted(elements)
        self.eset = set(self.elements)
        self.order = len(self.elements)
        self.ident = tuple(range(len(self.elements[0])))
        self._classes()

    def _classes(self):
        seen = set()
        raw = []
        for g in self.elements:
            if g in seen:
                continue
            cls = sorted({compose(compose(h, g), inverse(h)) for h in self.elements})
            seen.update(cls)
            raw.append(cls)
        raw.sort(key=lambda c: (elem_order(c[0]), len(c), c[0]))
        self.classes = raw
        self.class_of = {}
        for i, c in enumerate(raw):
            for g in c:
                self.class_of[g] = i
        self.reps = [c[0] for c in raw]
        self.sizes = [len(c) for c in raw]
        self.orders = [elem_order(r) for r in self.reps]
        self.exponent = reduce(lcm, self.orders, 1)
        counts = {}
        self.names = []
        for o in self.orders:
            k = counts.get(o, 0)
            counts[o] = k + 1
            self.names.append(f"{o}{chr(ord('a') + k)}")
        self.primes = prime_factors(self.order)

    def power_class(self, c, k):
        return self.class_of[power(self.reps[c], k)]

    def centralizer(self, g):
        return [h for h in self.elements if compose(h, g) == compose(g, h)]

    def normalizer(self, sub):
        s = set(sub)
        return [h for h in self.elements
                if all(compose(compose(h, x), inverse(h)) in s for x in sub)]


# --------------------------------------------------------------------------
# exact cyclotomic values as {exponent: int} at a given order


class Cyc:
    """Integer combination of m-th roots of unity (not reduced)."""

    def __init__(self, m, coeffs):
        self.m = m
        self.c = {e % m: v for e, v in coeffs.items() if v != 0}

    def embed(self, n):
        assert n % self.m == 0
        f = n // self.m
        return Cyc(n, {e * f: v for e, v in self.c.items()})

    def __add__(self, other):
        n = lcm(self.m, other.m)
        a, b = self.embed(n), other.embed(n)
        out = dict(a.c)
        for e, v in b.c.items():
            out[e] = out.get(e, 0) + v
        return Cyc(n, out)

    def scale(self, k):
        return Cyc(self.m, {e: k * v for e, v in self.c.items()})

    def __sub__(self, other):
        return self + other.scale(-1)

    def numeric(self):
        return sum(v * np.exp(2j * np.pi * e / self.m) for e, v in self.c.items())

    def to_string(self):
        val = self.numeric()
        if abs(val.imag) < 1e-9 and abs(val.real - round(val.real)) < 1e-9:
            return str(int(round(val.real)))
        m = self.m
        terms = dict(self.c)
        # shrink to the smallest order carrying every exponent
        for d in sorted(x for x in range(1, m + 1) if m % x == 0):
            step = m // d
            if all(e % step == 0 for e in terms):
                terms = {e // step: v for e, v in terms.items()}
                m = d
                break
        parts = []
        for e in sorted(terms):
            v = terms[e]
            if e == 0:
                body, coef = str(abs(v)), None
            else:
                body = f"E({m})" + (f"^{e}" if e != 1 else "")
                coef = abs(v)
            if coef is not None and coef != 1:
                body = f"{coef}*{body}"
            sign = "-" if v < 0 else "+"
            parts.append((sign, body))
        s = "".join(f"{sg}{b}" for sg, b in parts)
        return s[1:] if s.startswith("+") else s


# --------------------------------------------------------------------------
# character tables


def character_table(G, seed=7):
    n = len(G.classes)
    rng = np.random.default_rng(seed)
    # structure constants a[i][j][k] = #{x in C_i : x^-1 z_k in C_j}
    a = np.zeros((n, n, n))
    for k in range(n):
        z = G.reps[k]
        for i in range(n):
            for x in G.classes[i]:
                y = compose(inverse(x), z)
                a[i][G.class_of[y]][k] += 1
    for _ in range(50):
        coeffs = rng.normal(size=n)
        M = sum(coeffs[i] * a[i] for i in range(n))
        vals, vecs = np.linalg.eig(M)
        gaps = [abs(vals[i] - vals[j]) for i in range(n) for j in range(i + 1, n)]
        if not gaps or min(gaps) > 1e-6:
            break
    else:
        raise RuntimeError(f"{G.name}: no separating combination")
    chars = []
    for t in range(n):
        w = vecs[:, t] / vecs[0, t]
        s = sum(abs(w[k]) ** 2 / G.sizes[k] for k in range(n))
        deg = math.sqrt(G.order / s.real)
        chars.append([w[k] * deg / G.sizes[k] for k in range(n)])
    exact = []
    for chi in chars:
        row = []
        for k in range(n):
            m = G.orders[k]
            coeffs = {}
            for j in range(m):
                tot = sum(chi[G.power_class(k, t)] * np.exp(-2j * np.pi * j * t / m)
                          for t in range(m)) / m
                mult = int(round(tot.real))
                assert abs(tot - mult) < 1e-6, (G.name, k, tot)
                if mult:
                    coeffs[j] = mult
            c = Cyc(m, coeffs)
            assert abs(c.numeric() - chi[k]) < 1e-6
            row.append(c)
        exact.append(row)

    def key(row):
        vals = [r.numeric() for r in row]
        triv = all(abs(v - 1) < 1e-9 for v in vals)
        return (round(vals[0].real), 0 if triv else 1) + tuple(
            x for v in vals for x in (round(v.real, 6), round(v.imag, 6)))

    exact.sort(key=key)
    return exact


# --------------------------------------------------------------------------
# reduction modulo a prime ideal above p (power basis of Z[zeta_N])


def poly_divmod(num, den):
    num = list(num)
    out = [0] * max(1, len(num) - len(den) + 1)
    while len(num) >= len(den) and any(num):
        shift = len(num) - len(den)
        q = num[-1] // den[-1]
        assert q * den[-1] == num[-1]
        out[shift] = q
        for i, d in enumerate(den):
            num[shift + i] -= q * d
        while num and num[-1] == 0:
            num.pop()
    return out, num


_cyclo_cache = {}


def cyclotomic_poly(n):
    if n in _cyclo_cache:
        return _cyclo_cache[n]
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num, rem = poly_divmod(num, cyclotomic_poly(d))
            assert not any(rem)
    _cyclo_cache[n] = num
    return num


class FF:
    """F_{p^f} as polynomials modulo an irreducible polynomial."""

    def __init__(self, p, f):
        self.p, self.f = p, f
        self.mod = self._irreducible()

    def _irreducible(self):
        p, f = self.p, self.f
        if f == 1:
            return [0, 1]
        for tail in itertools.product(range(p), repeat=f):
            cand = list(tail) + [1]
            if cand[0] == 0:
                continue
            ok = True
            for d in range(1, f // 2 + 1):
                for t2 in itertools.product(range(p), repeat=d):
                    div = list(t2) + [1]
                    if not any(self._pmod(cand, div)):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                return cand
        raise RuntimeError("no irreducible")

    def _pmod(self, a, m):
        a = [x % self.p for x in a]
        while len(a) >= len(m):
            lead = a[-1]
            shift = len(a) - len(m)
            for i, c in enumerate(m):
                a[shift + i] = (a[shift + i] - lead * c) % self.p
            a.pop()
        return a

    def norm(self, a):
        a = self._pmod(list(a), self.mod)
        a += [0] * (self.f - len(a))
        return tuple(a[: self.f])

    def mul(self, a, b):
        out = [0] * (len(a) + len(b))
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return self.norm(out)

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def one(self):
        return self.norm([1])

    def zero(self):
        return self.norm([0])

    def pow(self, a, k):
        r, b = self.one(), a
        while k:
            if k & 1:
                r = self.mul(r, b)
            b = self.mul(b, b)
            k >>= 1
        return r

    def primitive(self):
        q1 = self.p ** self.f - 1
        fac = prime_factors(q1) if q1 > 1 else []
        for coeffs in itertools.product(range(self.p), repeat=self.f):
            g = tuple(reversed(coeffs))
            if g == self.zero():
                continue
            if all(self.pow(g, q1 // r) != self.one() for r in fac):
                return g
        raise RuntimeError("no primitive element")


class Residue:
    def __init__(self, N, p):
        self.N, self.p = N, p
        a = nu(N, p)
        self.pa = p ** a
        self.np_ = N // self.pa
        f = 1
        if self.np_ > 1:
            while pow(p, f, self.np_) != 1:
                f += 1
        self.F = FF(p, f)
        g = self.F.primitive()
        self.root = self.F.pow(g, (p ** f - 1) // self.np_)
        self.phi = cyclotomic_poly(N)
        beta = pow(self.pa, -1, self.np_) if self.np_ > 1 else 0
        self.zeta_img = self.F.pow(self.root, beta)

    def power_basis(self, c):
        """Integer coefficients of c in Z[x]/Phi_N."""
        c = c.embed(self.N)
        poly = [0] * self.N
        for e, v in c.c.items():
            poly[e] += v
        _, rem = poly_divmod(poly, self.phi)
        return rem

    def reduce_poly(self, poly):
        acc = self.F.zero()
        z = self.F.one()
        for v in poly:
            acc = self.F.add(acc, tuple((v * x) % self.p for x in z)) if v else acc
            z = self.F.mul(z, self.zeta_img)
        return acc

    def central_char(self, G, row):
        """omega_chi(K) reduced mod the prime ideal, for every class K."""
        deg = int(round(row[0].numeric().real))
        out = []
        for k in range(len(G.classes)):
            poly = self.power_basis(row[k].scale(G.sizes[k]))
            assert all(x % deg == 0 for x in poly), "central character not integral"
            out.append(self.reduce_poly([x // deg for x in poly]))
        return out


# --------------------------------------------------------------------------
# Brauer data


def numeric_rows(rows, cols):
    return np.array([[r[c].numeric() for c in cols] for r in rows])


def brauer_data(G, table, p, N, overrides=None):
    regular = [c for c in range(len(G.classes)) if G.orders[c] % p != 0]
    restr = numeric_rows(table, regular)
    degs = [int(round(r[0].numeric().real)) for r in table]
    if overrides and (G.name, p) in overrides:
        combos = overrides[(G.name, p)](table)
    else:
        cand = []
        for i, r in enumerate(restr):
            if not any(np.allclose(r, restr[j]) for j in cand):
                cand.append(i)

        def representable(v, depth=0):
            if np.allclose(v, 0):
                return True
            if v[0].real < 0.5:
                return False
            return any(representable(v - restr[j], depth + 1)
                       for j in cand if degs[j] <= v[0].real + 1e-9)

        irred = []
        for i in cand:
            if not any(degs[j] < degs[i] and representable(restr[i] - restr[j])
                       for j in cand if j != i):
                irred.append(i)
        combos = [{i: 1} for i in irred]
    if len(combos) != len(regular):
        raise RuntimeError(f"{G.name} p={p}: {len(combos)} Brauer characters for "
                           f"{len(regular)} regular classes")
    ibr = []
    for combo in combos:
        vals = []
        for c in regular:
            acc = Cyc(1, {})
            for i, k in combo.items():
                acc = acc + table[i][c].scale(k)
            vals.append(acc)
        ibr.append(vals)

    def ikey(vals):
        num = [v.numeric() for v in vals]
        triv = all(abs(x - 1) < 1e-9 for x in num)
        return (0 if triv else 1, round(num[0].real),) + tuple(
            x for v in num for x in (round(v.real, 6), round(v.imag, 6)))

    ibr.sort(key=ikey)
    B = np.array([[v.numeric() for v in row] for row in ibr])
    D = []
    for r in restr:
        sol = np.linalg.lstsq(B.T, r, rcond=None)[0]
        ints = [int(round(x.real)) for x in sol]
        assert np.allclose(sol, ints, atol=1e-6) and min(ints) >= 0, (G.name, p, sol)
        assert np.allclose(np.array(ints) @ B, r)
        D.append(ints)

    # blocks via central characters mod p, cross-checked against linkage
    res = Residue(N, p)
    omegas = [tuple(res.central_char(G, row)) for row in table]
    labels = {}
    groups = []
    for i, w in enumerate(omegas):
        if w not in labels:
            labels[w] = len(groups)
            groups.append([])
        groups[labels[w]].append(i)
    a = nu(G.order, p)

    def defect(g):
        return a - min(nu(degs[i], p) for i in g)

    groups.sort(key=lambda g: (-defect(g), g[0]))
    block_of_irr = [0] * len(table)
    for b, g in enumerate(groups):
        for i in g:
            block_of_irr[i] = b
    block_of_ibr = []
    for j in range(len(ibr)):
        bs = {block_of_irr[i] for i in range(len(table)) if D[i][j]}
        assert len(bs) == 1, (G.name, p, j, bs)
        block_of_ibr.append(bs.pop())
    # linkage components must agree
    parent = list(range(len(table)))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for j in range(len(ibr)):
        rows = [i for i in range(len(table)) if D[i][j]]
        for i in rows[1:]:
            parent[find(i)] = find(rows[0])
    for i in range(len(table)):
        for k in range(len(table)):
            assert (find(i) == find(k)) == (block_of_irr[i] == block_of_irr[k])
    return {
        "regular_classes": regular,
        "ibr": [[v.to_string() for v in row] for row in ibr],
        "decomposition": D,
        "block_of_irr": block_of_irr,
        "block_of_ibr": block_of_ibr,
    }, omegas, groups


def induced_block(G, H, table_h, brauer_h_groups, fusion, res, omegas_g, block_of_irr_g):
    """Brauer correspondent map: H-block id -> G-block id via induced central characters."""
    out = {}
    for b, members in enumerate(brauer_h_groups):
        theta = table_h[members[0]]
        om = res.central_char(H, theta)
        lam = [res.F.zero()] * len(G.classes)
        for L, K in enumerate(fusion):
            lam[K] = res.F.add(lam[K], om[L])
        hits = {block_of_irr_g[i] for i, w in enumerate(omegas_g) if list(w) == lam}
        if len(hits) == 1:
            out[b] = hits.pop()
    return out


def table_json(G, table):
    return {
        "name": G.name,
        "order": G.order,
        "exponent": G.exponent,
        "classes": [
            {
                "name": G.names[c],
                "size": G.sizes[c],
                "order": G.orders[c],
                "powermaps": {str(q): G.power_class(c, q) for q in prime_factors(G.exponent)},
            }
            for c in range(len(G.classes))
        ],
        "irreducibles": [[v.to_string() for v in row] for row in table],
    }


def subgroup_of(G, name, elems):
    H = Group(name, elems)
    fusion = [G.class_of[r] for r in H.reps]
    return H, fusion


# --------------------------------------------------------------------------
# corpus


def cyc(*cycles, n):
    p = list(range(n))
    for c in cycles:
        for i, x in enumerate(c):
            p[x] = c[(i + 1) % len(c)]
    return tuple(p)


def quaternion():
    # units 1,i,j,k with signs: element index = 4*s + u, s in {0,1}
    mult = {
        (0, 0): (0, 0), (0, 1): (0, 1), (0, 2): (0, 2), (0, 3): (0, 3),
        (1, 0): (0, 1), (1, 1): (1, 0), (1, 2): (0, 3), (1, 3): (1, 2),
        (2, 0): (0, 2), (2, 1): (1, 3), (2, 2): (1, 0), (2, 3): (0, 1),
        (3, 0): (0, 3), (3, 1): (0, 2), (3, 2): (1, 1), (3, 3): (1, 0),
    }

    def mul(x, y):
        s1, u1 = divmod(x, 4)
        s2, u2 = divmod(y, 4)
        s, u = mult[(u1, u2)]
        return 4 * ((s1 + s2 + s) % 2) + u

    def left(g):
        return tuple(mul(g, x) for x in range(8))

    return closure([left(1), left(2)])


def sl23():
    vecs = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]
    idx = {v: i for i, v in enumerate(vecs)}

    def act(m):
        return tuple(idx[((m[0][0] * a + m[0][1] * b) % 3, (m[1][0] * a + m[1][1] * b) % 3)]
                     for a, b in vecs)

    return closure([act(((1, 1), (0, 1))), act(((0, 2), (1, 0)))])


def corpus():
    groups = {}
    groups["C4"] = closure([cyc((0, 1, 2, 3), n=4)])
    groups["S3"] = closure([cyc((0, 1), n=3), cyc((0, 1, 2), n=3)])
    groups["D8"] = closure([cyc((0, 1, 2, 3), n=4), cyc((0, 2), n=4)])
    groups["Q8"] = quaternion()
    groups["A4"] = closure([cyc((0, 1, 2), n=4), cyc((0, 1), (2, 3), n=4)])
    groups["SL(2,3)"] = sl23()
    groups["S4"] = closure([cyc((0, 1), n=4), cyc((0, 1, 2, 3), n=4)])
    groups["A5"] = closure([cyc((0, 1, 2), n=5), cyc((0, 1, 2, 3, 4), n=5)])
    groups["D10"] = closure([cyc((0, 1, 2, 3, 4), n=5), cyc((1, 4), (2, 3), n=5)])
    groups["F20"] = closure([cyc((0, 1, 2, 3, 4), n=5), cyc((1, 2, 4, 3), n=5)])
    expected = {"C4": 4, "S3": 6, "D8": 8, "Q8": 8, "A4": 12, "SL(2,3)": 24,
                "S4": 24, "A5": 60, "D10": 10, "F20": 20}
    for k, v in groups.items():
        assert len(v) == expected[k], (k, len(v))
    return groups


def a5_mod2(table):
    # IBr(A5) mod 2: 1, 3 - 1, 3' - 1, 4
    degs = [int(round(r[0].numeric().real)) for r in table]
    one = degs.index(1)
    threes = [i for i, d in enumerate(degs) if d == 3]
    four = degs.index(4)
    return [{one: 1}, {threes[0]: 1, one: -1}, {threes[1]: 1, one: -1}, {four: 1}]


OVERRIDES = {("A5", 2): a5_mod2}


def small_name(H):
    return f"{H.name}"


def describe(elems):
    """Name a small group by order and structure (for nested table labels)."""
    n = len(elems)
    orders = sorted(elem_order(g) for g in elems)
    if orders[-1] == n:
        return f"C{n}"
    abelian = all(compose(a, b) == compose(b, a) for a in elems for b in elems)
    if abelian:
        return "C2xC2" if n == 4 else f"C{n // 2}xC2"
    inv = sum(1 for o in orders if o == 2)
    known = {(6, 3): "S3", (8, 5): "D8", (8, 1): "Q8", (10, 5): "D10", (12, 3): "A4",
             (12, 7): "D12", (20, 5): "F20", (24, 1): "SL(2,3)", (24, 9): "S4"}
    return known.get((n, inv), f"G{n}")


def export_group(name, elems):
    G = Group(name, elems)
    N = G.exponent
    table = character_table(G)
    data = table_json(G, table)
    data = {"format": 1, **data}
    data["primes"] = {}
    brauer_cache = {}
    for p in G.primes:
        bd, omegas, groups = brauer_data(G, table, p, N, OVERRIDES)
        brauer_cache[p] = (bd, omegas, groups)
        res = Residue(N, p)
        sections = []
        for u in range(len(G.classes)):
            if G.orders[u] != p ** nu(G.orders[u], p):
                continue
            if G.orders[u] == 1:
                sections.append({"u_class": u})
                continue
            urep = G.reps[u]
            celems = G.centralizer(urep)
            C = Group(describe(celems), celems)
            ctab = character_table(C)
            cbd, _, cgroups = brauer_data(C, ctab, p, N, OVERRIDES)
            fusion = [G.class_of[r] for r in C.reps]
            uin = C.class_of[urep]
            utimes = [C.class_of[compose(urep, r)] for r in C.reps]
            corr = induced_block(G, C, ctab, cgroups, fusion, res, omegas, bd["block_of_irr"])
            assert len(corr) == len(cgroups), (name, p, u, corr)
            cdata = table_json(C, ctab)
            cdata["primes"] = {str(p): cbd}
            sections.append({
                "u_class": u,
                "centralizer": cdata,
                "fusion": fusion,
                "u_in_centralizer": uin,
                "u_times": utimes,
                "correspondent_block": {str(k): v for k, v in sorted(corr.items())},
            })
        bd = dict(bd)
        bd["sections"] = sections
        data["primes"][str(p)] = bd

    # subgroups for restriction checks: TI Sylow normalisers
    subgroups = {}
    for p in G.primes:
        sylow = sylow_subgroup(G, p)
        if len(sylow) == 1:
            continue
        cyclic = any(elem_order(g) == len(sylow) for g in sylow)
        if cyclic:
            gen = next(g for g in sylow if elem_order(g) == len(sylow))
            p1 = sorted({power(gen, len(sylow) // p * k) for k in range(p)})
            H_elems = G.normalizer(p1)
        else:
            H_elems = G.normalizer(sylow)
        if len(H_elems) == G.order:
            continue
        hset = set(H_elems)
        sset = set(sylow)
        ti = all(
            len(sset & {compose(compose(g, x), inverse(g)) for x in sylow}) == 1
            for g in G.elements if g not in hset)
        if not ti:
            continue
        key = tuple(sorted(H_elems))
        H = Group(describe(H_elems), H_elems)
        if key not in subgroups:
            htab = character_table(H)
            subgroups[key] = {"H": H, "table": htab,
                              "fusion": [G.class_of[r] for r in H.reps], "primes": {}}
        ent = subgroups[key]
        bd, omegas, groups = brauer_cache[p]
        hbd, _, hgroups = brauer_data(H, ent["table"], p, N, OVERRIDES)
        res = Residue(N, p)
        corr = induced_block(G, H, ent["table"], hgroups, ent["fusion"], res, omegas,
                             bd["block_of_irr"])
        a = nu(G.order, p)
        hdegs = [int(round(r[0].numeric().real)) for r in ent["table"]]
        gdegs = [int(round(r[0].numeric().real)) for r in table]
        full_g = [b for b, g in enumerate(groups)
                  if a - min(nu(gdegs[i], p) for i in g) == a]
        full_h = [b for b, g in enumerate(hgroups)
                  if a - min(nu(hdegs[i], p) for i in g) == a]
        gb_to_hb = {}
        for hb in full_h:
            if hb in corr and corr[hb] in full_g:
                gb_to_hb[corr[hb]] = hb
        # p-element classes of G having a representative whose centralizer lies in H
        cent_classes = []
        for u in range(len(G.classes)):
            if G.orders[u] == 1 or G.orders[u] != p ** nu(G.orders[u], p):
                continue
            if any(set(G.centralizer(x)) <= hset for x in G.classes[u]):
                cent_classes.append(u)
        hbd = dict(hbd)
        hbd.update({
            "ti": True,
            "cyclic_defect": cyclic,
            "centralizer_classes": cent_classes,
            "correspondent_block": {str(k): v for k, v in sorted(gb_to_hb.items())},
        })
        ent["primes"][str(p)] = hbd
    data["subgroups"] = []
    for ent in subgroups.values():
        tj = table_json(ent["H"], ent["table"])
        data["subgroups"].append({
            "name": ent["H"].name,
            "table": tj,
            "fusion": ent["fusion"],
            "primes": ent["primes"],
        })
    return data


def sylow_subgroup(G, p):
    size = p ** nu(G.order, p)
    pel = [g for g in G.elements if G.orders[G.class_of[g]] == p ** nu(G.orders[G.class_of[g]], p)]
    # grow a p-subgroup greedily from p-elements; deterministic by element order
    current = [G.ident]
    for g in pel:
        if len(current) == size:
            break
        if g in current:
            continue
        cand = closure(current + [g]) if len(current) > 1 else closure([g])
        if len(cand) <= size and len(cand) == p ** nu(len(cand), p):
            current = cand
    assert len(current) == size, (G.name, p, len(current))
    return current


def main():
    out = sys.argv[1] if len(sys.argv) > 1 else "data"
    import os
    os.makedirs(out, exist_ok=True)
    manifest = {"format": 1, "groups": []}
    for name, elems in corpus().items():
        data = export_group(name, elems)
        fname = name.replace("(", "").replace(")", "").replace(",", "_") + ".json"
        with open(os.path.join(out, fname), "w") as fh:
            json.dump(data, fh, indent=1)
            fh.write("\n")
        manifest["groups"].append({
            "group": name,
            "file": fname,
            "primes": [int(p) for p in data["primes"]],
            "subgroups": [
                {"name": s["name"], "primes": [int(p) for p in s["primes"]],
                 "ti": [int(p) for p, v in s["primes"].items() if v.get("ti")]}
                for s in data["subgroups"]
            ],
        })
        print(f"{name}: {data['order']} elements, {len(data['classes'])} classes, "
              f"primes {list(data['primes'])}, {len(data['subgroups'])} subgroups")
    with open(os.path.join(out, "manifest.json"), "w") as fh:
        json.dump(manifest, fh, indent=1)
        fh.write("\n")


if __name__ == "__main__":
    main()
