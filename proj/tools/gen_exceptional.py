#!/usr/bin/env python3
"""Regenerate data/exceptional/G*.json.

Each file lists a few order-2 reflections with exact entries in Q(zeta_n),
power basis reduced modulo the n-th cyclotomic polynomial.  The script
closes the generator set under reflection conjugation and refuses to write
a file whose closure does not have the expected number of reflections.

Usage: gen_exceptional.py [OUTDIR]
"""

import itertools
import json
import math
import sys
from fractions import Fraction
from pathlib import Path


def cyclotomic_poly(n):
    """Integer coefficients of Phi_n, lowest degree first."""
    # x^n - 1 divided by Phi_d for every proper divisor d
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = poly_div_exact(num, cyclotomic_poly(d))
    return num


def poly_div_exact(a, b):
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = a[i + len(b) - 1] // b[-1]
        q[i] = c
        for j, bj in enumerate(b):
            a[i + j] -= c * bj
    assert all(x == 0 for x in a)
    return q


class Cyc:
    """Element of Q(zeta_n) in reduced power basis."""

    _phi = {}

    def __init__(self, n, coeffs):
        self.n = n
        phi = Cyc.phi_poly(n)
        c = [Fraction(x) for x in coeffs]
        deg = len(phi) - 1
        for i in range(len(c) - 1, deg - 1, -1):
            lead = c[i]
            if lead:
                for j in range(deg + 1):
                    c[i - deg + j] -= lead * phi[j]
        c = c[:deg] + [Fraction(0)] * max(0, deg - len(c))
        self.c = tuple(c)

    @staticmethod
    def phi_poly(n):
        if n not in Cyc._phi:
            Cyc._phi[n] = cyclotomic_poly(n)
        return Cyc._phi[n]

    @staticmethod
    def zeta(n, k=1):
        return Cyc(n, [0] * (k % n) + [1])

    @staticmethod
    def const(n, x):
        return Cyc(n, [x])

    def __add__(self, o):
        o = self._lift(o)
        return Cyc(self.n, [a + b for a, b in zip(self.c, o.c)])

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.n, [-a for a in self.c])

    def __sub__(self, o):
        return self + (-self._lift(o))

    def __rsub__(self, o):
        return self._lift(o) - self

    def __mul__(self, o):
        o = self._lift(o)
        out = [Fraction(0)] * (len(self.c) + len(o.c))
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(o.c):
                    out[i + j] += a * b
        return Cyc(self.n, out)

    __rmul__ = __mul__

    def _lift(self, o):
        return o if isinstance(o, Cyc) else Cyc.const(self.n, o)

    def conj(self):
        out = [Fraction(0)] * self.n
        for i, a in enumerate(self.c):
            out[(-i) % self.n] += a
        return Cyc(self.n, out)

    def is_zero(self):
        return not any(self.c)

    def inverse(self):
        # solve x * self = 1 by linear algebra on the multiplication matrix
        d = len(self.c)
        cols = []
        for k in range(d):
            basis = Cyc(self.n, [0] * k + [1])
            cols.append((self * basis).c)
        m = [[cols[j][i] for j in range(d)] + [Fraction(1 if i == 0 else 0)] for i in range(d)]
        for col in range(d):
            piv = next(r for r in range(col, d) if m[r][col] != 0)
            m[col], m[piv] = m[piv], m[col]
            pv = m[col][col]
            m[col] = [x / pv for x in m[col]]
            for r in range(d):
                if r != col and m[r][col] != 0:
                    f = m[r][col]
                    m[r] = [x - f * y for x, y in zip(m[r], m[col])]
        return Cyc(self.n, [m[i][d] for i in range(d)])

    def __eq__(self, o):
        return self.c == self._lift(o).c

    def __hash__(self):
        return hash(self.c)


def mat_mul(a, b):
    n = len(a)
    return [[sum((a[i][k] * b[k][j] for k in range(n)), Cyc.const(a[0][0].n, 0))
             for j in range(n)] for i in range(n)]


def mat_key(m):
    return tuple(x.c for row in m for x in row)


def reflection(root):
    """x -> x - 2 <x,a>/<a,a> a for the standard Hermitian form."""
    n = root[0].n
    norm = sum((x * x.conj() for x in root), Cyc.const(n, 0))
    scale = 2 * norm.inverse()
    dim = len(root)
    return [[Cyc.const(n, 1 if i == j else 0) - scale * root[i] * root[j].conj()
             for j in range(dim)] for i in range(dim)]


def rank_one_form(g):
    """Write g = I - r f with the first nonzero coordinate of r equal to 1."""
    dim = len(g)
    n = g[0][0].n
    d = [[Cyc.const(n, int(i == j)) - g[i][j] for j in range(dim)] for i in range(dim)]
    col = next(j for j in range(dim) if any(not d[i][j].is_zero() for i in range(dim)))
    lead = next(i for i in range(dim) if not d[i][col].is_zero())
    inv = d[lead][col].inverse()
    r = tuple(d[i][col] * inv for i in range(dim))
    f = tuple(d[lead][j] for j in range(dim))
    return r, f


def conjugate_form(y, rf):
    """Rank-one form of y s y for the reflection y."""
    r, f = rf
    dim = len(r)
    n = r[0].n
    yr = [sum((y[i][k] * r[k] for k in range(dim)), Cyc.const(n, 0)) for i in range(dim)]
    fy = [sum((f[k] * y[k][j] for k in range(dim)), Cyc.const(n, 0)) for j in range(dim)]
    lead = next(x for x in yr if not x.is_zero())
    inv = lead.inverse()
    return tuple(x * inv for x in yr), tuple(x * lead for x in fy)


def form_key(rf):
    return tuple(x.c for x in rf[0]) + tuple(x.c for x in rf[1])


def form_matrix(rf):
    r, f = rf
    dim = len(r)
    n = r[0].n
    return [[Cyc.const(n, int(i == j)) - r[i] * f[j] for j in range(dim)] for i in range(dim)]


def closure_size(gens, limit=200):
    forms = {}
    for g in gens:
        rf = rank_one_form(g)
        forms[form_key(rf)] = rf
    mats = {k: form_matrix(v) for k, v in forms.items()}
    frontier = list(forms.keys())
    while frontier:
        new = []
        keys = list(forms.keys())
        for ky in keys:
            for ks in frontier:
                for a, b in ((ky, ks), (ks, ky)):
                    rf = conjugate_form(mats[a], forms[b])
                    k = form_key(rf)
                    if k not in forms:
                        forms[k] = rf
                        mats[k] = form_matrix(rf)
                        new.append(k)
                        if len(forms) > limit:
                            return len(forms)
        frontier = new
    return len(forms)


def entry_json(x):
    den = 1
    for c in x.c:
        den = den * c.denominator // math.gcd(den, c.denominator)
    return {"den": den, "num": [int(c * den) for c in x.c]}


def choose_generators(candidates, expected, required=()):
    """Greedy: add candidates until the closure reaches the expected size."""
    gens = list(required)
    size = closure_size(gens, limit=expected + 1) if gens else 0
    for c in candidates:
        if size == expected:
            break
        trial = gens + [c]
        trial_size = closure_size(trial, limit=expected + 1)
        if trial_size > size:
            gens, size = trial, trial_size
    return gens


def is_reflection(g):
    dim = len(g)
    n = g[0][0].n
    d = [[Cyc.const(n, int(i == j)) - g[i][j] for j in range(dim)] for i in range(dim)]
    if all(x.is_zero() for row in d for x in row):
        return False
    for i, k in itertools.combinations(range(dim), 2):
        for j, l in itertools.combinations(range(dim), 2):
            if not (d[i][j] * d[k][l] - d[i][l] * d[k][j]).is_zero():
                return False
    ident = [[Cyc.const(n, int(i == j)) for j in range(dim)] for i in range(dim)]
    return mat_key(mat_mul(g, g)) == mat_key(ident)


def write_group(outdir, name, conductor, order, expected, gens, rank=None):
    if not all(is_reflection(g) for g in gens):
        raise SystemExit(f"{name}: a generator is not a reflection")
    got = closure_size(gens, limit=expected + 1)
    if got != expected:
        raise SystemExit(f"{name}: closure has {got} reflections, expected {expected}")
    rank = rank or len(gens[0])
    doc = {
        "name": name,
        "rank": rank,
        "conductor": conductor,
        "expected_reflection_count": expected,
        "order": order,
        "generators": [[entry_json(x) for row in g for x in row] for g in gens],
    }
    path = Path(outdir) / f"{name}.json"
    path.write_text(json.dumps(doc, indent=1) + "\n")
    print(f"{name}: {len(gens)} generators, {got} reflections -> {path}")


# quaternion a + b i + c j + d k as an SU(2) matrix, then scaled by i
def quaternion_reflection(n, i_unit, a, b, c, d):
    m = [[a + b * i_unit, c + d * i_unit], [-c + d * i_unit, a - b * i_unit]]
    return [[i_unit * x for x in row] for row in m]


def g12_g13(outdir):
    n = 8
    z = Cyc.zeta(n)
    i = z * z
    sqrt2 = z - z * z * z
    h = sqrt2 * Fraction(1, 2)  # 1/sqrt2
    zero = Cyc.const(n, 0)
    one = Cyc.const(n, 1)
    # edge elements (+-q1 +- q2)/sqrt2 of the binary octahedral group
    edges = []
    for p, q in itertools.combinations(range(3), 2):
        for sign in (1, -1):
            coords = [zero, zero, zero]
            coords[p] = h
            coords[q] = h * sign
            edges.append(quaternion_reflection(n, i, zero, *coords))
    write_group(outdir, "G12", n, 48, 12, choose_generators(edges, 12))
    q_i = quaternion_reflection(n, i, zero, one, zero, zero)
    write_group(outdir, "G13", n, 96, 18, choose_generators(edges, 18, [q_i]))


def g22(outdir):
    n = 20
    i = Cyc.zeta(n, 5)
    z5 = Cyc.zeta(n, 4)
    tau = -(z5 * z5) - z5 * z5 * z5
    half = Fraction(1, 2)
    zero = Cyc.const(n, 0)
    # pure icosians: even permutations of (0, 1, tau, 1/tau)/2 with signs
    vals = [zero, half * Cyc.const(n, 1), half * tau, half * (tau - 1)]
    cands = []
    for perm in itertools.permutations(range(4)):
        inversions = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
        if inversions % 2 or perm[0] != 0:
            continue
        for signs in itertools.product((1, -1), repeat=2):
            coords = [vals[perm[k]] for k in range(1, 4)]
            coords[1] = coords[1] * signs[0]
            coords[2] = coords[2] * signs[1]
            cands.append(quaternion_reflection(n, i, zero, *coords))
    write_group(outdir, "G22", n, 240, 30, choose_generators(cands, 30))


def g24(outdir):
    n = 7
    z = [Cyc.zeta(n, k) for k in range(7)]
    gauss = z[1] + z[2] + z[4] - z[3] - z[5] - z[6]  # sqrt(-7)
    inv = gauss.inverse()
    a, b, c = z[1] - z[6], z[2] - z[5], z[4] - z[3]
    m = [[a, b, c], [b, c, a], [c, a, b]]
    # involution of PSL(2,7) in Klein's representation, up to the sign that
    # makes it a reflection
    r = [[inv * x for x in row] for row in m]
    if not is_reflection(r):
        r = [[-x for x in row] for row in r]
    assert mat_key(mat_mul(r, r)) == mat_key([[Cyc.const(n, int(p == q)) for q in range(3)] for p in range(3)])
    s = [[z[4] if p == q == 0 else z[2] if p == q == 1 else z[1] if p == q == 2 else Cyc.const(n, 0)
          for q in range(3)] for p in range(3)]
    t = [[Cyc.const(n, 1 if q == (p + 1) % 3 else 0) for q in range(3)] for p in range(3)]
    s_inv = [[x.conj() for x in row] for row in s]
    t_inv = [[t[q][p] for q in range(3)] for p in range(3)]
    r2 = mat_mul(mat_mul(s, r), s_inv)
    r3 = mat_mul(mat_mul(t, r), t_inv)
    write_group(outdir, "G24", n, 336, 21, [r, r2, r3])


def g27(outdir):
    n = 15
    z5 = Cyc.zeta(n, 3)
    w = Cyc.zeta(n, 5)
    tau = -(z5 * z5) - z5 * z5 * z5
    half = Fraction(1, 2)
    zero = Cyc.const(n, 0)
    one = Cyc.const(n, 1)
    # simple roots of H3 plus one extra reflection
    roots = [
        [one, zero, zero],
        [half * one, half * tau, half * (tau - 1)],
        [zero, one, zero],
        [zero, one, w],
    ]
    write_group(outdir, "G27", n, 2160, 45, [reflection(r) for r in roots])


def g29_g31(outdir):
    n = 4
    i = Cyc.zeta(n)
    zero = Cyc.const(n, 0)
    one = Cyc.const(n, 1)
    # G(4,4,4) simple-ish roots plus (1,1,1,1)
    base = [
        [one, -one, zero, zero],
        [zero, one, -one, zero],
        [zero, zero, one, -one],
        [zero, zero, one, -i],
    ]
    write_group(outdir, "G29", n, 7680, 40, [reflection(r) for r in base + [[one, one, one, one]]])
    write_group(outdir, "G31", n, 46080, 60,
                [reflection(r) for r in base + [[one, one, one, one], [one, zero, zero, zero]]])


def g33_g34(outdir):
    n = 3
    w = Cyc.zeta(n)
    zero = Cyc.const(n, 0)
    one = Cyc.const(n, 1)
    th = w - w * w
    roots = []
    for p, q in itertools.combinations(range(6), 2):
        for u in (one, w, w * w):
            for up in (one, w, w * w):
                v = [zero] * 6
                v[p] = th * u
                v[q] = -(th * up)
                roots.append(v)
    for a in itertools.product(range(3), repeat=5):
        a = (0,) + a
        if sum(a) % 3 == 0:
            roots.append([Cyc.zeta(n, k) for k in a])
    # K12 minimal vectors, one line per root
    write_group(outdir, "G34", n, 39191040, 126,
                choose_generators([reflection(r) for r in roots[::9] + roots[135:]], 126))

    # roots orthogonal to theta(e1 - e2), restricted to {x1 = x2}
    r0 = roots[0]
    def herm(a, b):
        return sum((x * y.conj() for x, y in zip(a, b)), Cyc.const(n, 0))
    orth = [r for r in roots if herm(r, r0).is_zero()]
    def restrict(m):
        # basis e1+e2, e3, e4, e5, e6 of the invariant subspace
        basis = [[one, one, zero, zero, zero, zero]] + \
                [[one if k == j else zero for k in range(6)] for j in range(2, 6)]
        out = []
        for row in range(5):
            out.append([])
        cols = []
        for b in basis:
            img = [sum((m[p][q] * b[q] for q in range(6)), Cyc.const(n, 0)) for p in range(6)]
            assert img[0] == img[1]
            cols.append([img[0]] + img[2:])
        return [[cols[j][p] for j in range(5)] for p in range(5)]
    write_group(outdir, "G33", n, 51840, 45,
                choose_generators([restrict(reflection(r)) for r in orth], 45))


def main():
    outdir = sys.argv[1] if len(sys.argv) > 1 else str(Path(__file__).resolve().parent.parent / "data" / "exceptional")
    Path(outdir).mkdir(parents=True, exist_ok=True)
    g12_g13(outdir)
    g22(outdir)
    g24(outdir)
    g27(outdir)
    g29_g31(outdir)
    g33_g34(outdir)


if __name__ == "__main__":
    main()
