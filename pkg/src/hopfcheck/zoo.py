"""Builders for the stock of test algebras.

Every builder returns fully verified-by-construction structure data; the
axiom suite in hopf.py is still run over each one in the tests, so a bug
here shows up as a red check rather than a silent wrong answer.
"""

from __future__ import annotations

from .cyclotomic import CYC_MINUS_ONE, CYC_ONE, CYC_ZERO, Cyc, lcm
from .errors import InvalidCayleyTable, NotPrimitiveRoot
from .hopf import Elem, Functional, HopfData
from .linalg import Mat, Tensor3


def _zeros3(d: int) -> list:
    return [CYC_ZERO] * (d * d * d)


def _set3(buf: list, d: int, i: int, j: int, k: int, v: Cyc) -> None:
    buf[(i * d + j) * d + k] = v


def _validate_cayley(table: list) -> list:
    """Check a Cayley table is a genuine group law; return the inverse map."""
    n = len(table)
    if n == 0:
        raise InvalidCayleyTable("empty table")
    for row in table:
        if len(row) != n or any(not (0 <= x < n) for x in row):
            raise InvalidCayleyTable("table is not n x n over 0..n-1")
    for j in range(n):
        if table[0][j] != j or table[j][0] != j:
            raise InvalidCayleyTable("index 0 is not a two-sided identity")
    for i in range(n):
        if sorted(table[i]) != list(range(n)) or sorted(r[i] for r in table) != list(range(n)):
            raise InvalidCayleyTable("table rows/columns are not permutations")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if table[table[i][j]][k] != table[i][table[j][k]]:
                    raise InvalidCayleyTable(f"associativity fails at ({i},{j},{k})")
    inv = [0] * n
    for i in range(n):
        hits = [j for j in range(n) if table[i][j] == 0]
        if len(hits) != 1:
            raise InvalidCayleyTable(f"element {i} has no unique inverse")
        inv[i] = hits[0]
    return inv


def group_algebra(name: str, table: list) -> HopfData:
    """Group algebra from a Cayley table.

    table[i][j] is the 0-based index of the product of elements i and j.
    Index 0 must be the identity.  Star sends each group element to its
    inverse, which makes every complex group algebra a *-algebra.
    """
    n = len(table)
    inv = _validate_cayley(table)
    mult = _zeros3(n)
    comult = _zeros3(n)
    for i in range(n):
        for j in range(n):
            _set3(mult, n, i, j, table[i][j], CYC_ONE)
        _set3(comult, n, i, i, i, CYC_ONE)
    antipode = Mat.zero(n, n)
    star = Mat.zero(n, n)
    for i in range(n):
        antipode.entries[inv[i] * n + i] = CYC_ONE
        star.entries[inv[i] * n + i] = CYC_ONE
    return HopfData(
        name=name, dim=n, field_order=1,
        mult=Tensor3(n, mult), unit=Elem(tuple(CYC_ONE if i == 0 else CYC_ZERO for i in range(n))),
        comult=Tensor3(n, comult), counit=Functional((CYC_ONE,) * n),
        antipode=antipode, star=star)


def function_algebra(name: str, table: list) -> HopfData:
    """Functions on a finite group, in the basis of point indicators.

    Pointwise product, coproduct dual to the group law, antipode pulls
    back along inversion, star is pointwise conjugation (the identity
    matrix in this basis).
    """
    n = len(table)
    inv = _validate_cayley(table)
    mult = _zeros3(n)
    comult = _zeros3(n)
    for i in range(n):
        _set3(mult, n, i, i, i, CYC_ONE)
        for a in range(n):
            for b in range(n):
                if table[a][b] == i:
                    _set3(comult, n, i, a, b, CYC_ONE)
    antipode = Mat.zero(n, n)
    for i in range(n):
        antipode.entries[inv[i] * n + i] = CYC_ONE
    return HopfData(
        name=name, dim=n, field_order=1,
        mult=Tensor3(n, mult), unit=Elem((CYC_ONE,) * n),
        comult=Tensor3(n, comult),
        counit=Functional(tuple(CYC_ONE if i == 0 else CYC_ZERO for i in range(n))),
        antipode=antipode, star=Mat.identity(n))


def cyclic_table(n: int) -> list:
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def symmetric_table_s3() -> list:
    """S_3 with elements ordered e, r, r2, s, sr, sr2 (r of order 3, s of order 2)."""
    elems = [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)]  # (s-exp, r-exp), s r = r^2 s
    def mul(a, b):
        sa, ra = a
        sb, rb = b
        # (s^sa r^ra)(s^sb r^rb) = s^(sa+sb) r^(ra*(-1)^sb + rb)
        return ((sa + sb) % 2, (ra * (1 if sb == 0 else -1) + rb) % 3)
    return [[elems.index(mul(a, b)) for b in elems] for a in elems]


def sweedler() -> HopfData:
    """The 4-dimensional algebra with basis 1, g, x, gx: g^2=1, x^2=0, xg=-gx,
    g group-like, x skew-primitive, S(g)=g, S(x)=-gx, star fixes 1, g, x and
    flips the sign of gx."""
    d = 4
    I, G, X, GX = range(4)
    mult = _zeros3(d)
    rules = {
        (I, I): [(I, 1)], (I, G): [(G, 1)], (I, X): [(X, 1)], (I, GX): [(GX, 1)],
        (G, I): [(G, 1)], (G, G): [(I, 1)], (G, X): [(GX, 1)], (G, GX): [(X, 1)],
        (X, I): [(X, 1)], (X, G): [(GX, -1)], (X, X): [], (X, GX): [],
        (GX, I): [(GX, 1)], (GX, G): [(X, -1)], (GX, X): [], (GX, GX): [],
    }
    for (i, j), terms in rules.items():
        for k, c in terms:
            _set3(mult, d, i, j, k, Cyc.rational(c))
    comult = _zeros3(d)
    _set3(comult, d, I, I, I, CYC_ONE)
    _set3(comult, d, G, G, G, CYC_ONE)
    # D(x) = x (x) 1 + g (x) x
    _set3(comult, d, X, X, I, CYC_ONE)
    _set3(comult, d, X, G, X, CYC_ONE)
    # D(gx) = D(g) D(x) = gx (x) g + 1 (x) gx
    _set3(comult, d, GX, GX, G, CYC_ONE)
    _set3(comult, d, GX, I, GX, CYC_ONE)
    antipode = Mat.zero(d, d)
    antipode.entries[I * d + I] = CYC_ONE
    antipode.entries[G * d + G] = CYC_ONE
    antipode.entries[GX * d + X] = CYC_MINUS_ONE  # S(x) = -gx
    antipode.entries[X * d + GX] = CYC_ONE        # S(gx) = x
    star = Mat.zero(d, d)
    star.entries[I * d + I] = CYC_ONE
    star.entries[G * d + G] = CYC_ONE
    star.entries[X * d + X] = CYC_ONE
    star.entries[GX * d + GX] = CYC_MINUS_ONE
    return HopfData(
        name="sweedler", dim=d, field_order=1,
        mult=Tensor3(d, mult), unit=Elem((CYC_ONE, CYC_ZERO, CYC_ZERO, CYC_ZERO)),
        comult=Tensor3(d, comult),
        counit=Functional((CYC_ONE, CYC_ONE, CYC_ZERO, CYC_ZERO)),
        antipode=antipode, star=star)


def taft(n: int, q: Cyc | None = None) -> HopfData:
    """Taft algebra of dimension n^2: generators g, x with g^n=1, x^n=0,
    xg = q gx for a primitive n-th root of unity q.  Basis ordered
    1, g, ..., g^(n-1), x, gx, ..., g^(n-1)x, ..., g^(n-1)x^(n-1),
    so index(g^i x^j) = j*n + i.  No star structure for n > 2."""
    if n < 2:
        raise ValueError("need n >= 2")
    if q is None:
        q = Cyc.root(n, 1)
    # q must be a primitive n-th root of unity
    p = CYC_ONE
    for m in range(1, n):
        p = p * q
        if p == CYC_ONE:
            raise NotPrimitiveRoot(f"q^{m} = 1 with m < n")
    if p * q != CYC_ONE:
        raise NotPrimitiveRoot("q^n != 1")

    d = n * n
    idx = lambda i, j: j * n + i
    qpow = [CYC_ONE]
    for _ in range(1, 2 * n):
        qpow.append(qpow[-1] * q)

    mult = _zeros3(d)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    # (g^i x^j)(g^k x^l) = q^(jk) g^(i+k) x^(j+l), zero past x^n
                    if j + l < n:
                        _set3(mult, d, idx(i, j), idx(k, l), idx((i + k) % n, j + l),
                              qpow[(j * k) % n])

    # coproduct: D(g) = g (x) g, D(x) = x (x) 1 + g (x) x, extended
    # multiplicatively inside the tensor square
    comult = _zeros3(d)
    dx = {(idx(0, 1), idx(0, 0)): CYC_ONE, (idx(1, 0), idx(0, 1)): CYC_ONE}

    def tmul(t1: dict, t2: dict) -> dict:
        out: dict = {}
        for (a, b), c1 in t1.items():
            a1, aj = a % n, a // n
            b1, bj = b % n, b // n
            for (c, e), c2 in t2.items():
                c1i, cj = c % n, c // n
                e1, ej = e % n, e // n
                if aj + cj >= n or bj + ej >= n:
                    continue
                coeff = c1 * c2 * qpow[(aj * c1i) % n] * qpow[(bj * e1) % n]
                key = (idx((a1 + c1i) % n, aj + cj), idx((b1 + e1) % n, bj + ej))
                v = out.get(key)
                out[key] = coeff if v is None else v + coeff
        return {k: v for k, v in out.items() if not v.is_zero()}

    for i in range(n):
        for j in range(n):
            t = {(idx(i, 0), idx(i, 0)): CYC_ONE}  # D(g)^i = g^i (x) g^i
            for _ in range(j):
                t = tmul(t, dx)
            for (a, b), c in t.items():
                _set3(comult, d, idx(i, j), a, b, c)

    # S(g) = g^(n-1), S(x) = -g^(n-1) x; anti-homomorphism on the basis:
    # S(g^i x^j) = S(x)^j S(g)^i = (-1)^j q^(j(j-1)/2) ... computed by
    # multiplying exact elements instead of trusting a closed form.
    counit = Functional(tuple(CYC_ONE if v < n else CYC_ZERO for v in range(d)))
    unit = Elem(tuple(CYC_ONE if v == 0 else CYC_ZERO for v in range(d)))
    h = HopfData(name=f"taft({n})", dim=d, field_order=q.order,
                 mult=Tensor3(d, mult), unit=unit,
                 comult=Tensor3(d, comult), counit=counit,
                 antipode=Mat.identity(d), star=None)
    sg = h.basis(idx(n - 1, 0))
    sx = Elem(tuple(CYC_MINUS_ONE if v == idx(n - 1, 1) else CYC_ZERO for v in range(d)))
    cols = []
    for i in range(n):
        for j in range(n):
            acc = h.unit
            for _ in range(j):
                acc = h.mul(acc, sx)
            for _ in range(i):
                acc = h.mul(acc, sg)
            cols.append((idx(i, j), acc))
    antipode = Mat.zero(d, d)
    for col, e in cols:
        for row, c in enumerate(e.coords):
            antipode.entries[row * d + col] = c
    h.antipode = antipode
    return h


def tensor_product(name: str, h1: HopfData, h2: HopfData) -> HopfData:
    """Componentwise tensor product; index (i1, i2) -> i1*dim2 + i2."""
    d1, d2 = h1.dim, h2.dim
    d = d1 * d2
    fo = lcm(h1.field_order, h2.field_order)
    idx = lambda a, b: a * d2 + b

    mult = _zeros3(d)
    for i1 in range(d1):
        for j1 in range(d1):
            for k1, c1 in h1.mult_pairs[i1][j1]:
                for i2 in range(d2):
                    for j2 in range(d2):
                        for k2, c2 in h2.mult_pairs[i2][j2]:
                            _set3(mult, d, idx(i1, i2), idx(j1, j2), idx(k1, k2), c1 * c2)
    comult = _zeros3(d)
    for k1 in range(d1):
        for k2 in range(d2):
            for i1, j1, c1 in h1.comult_terms[k1]:
                for i2, j2, c2 in h2.comult_terms[k2]:
                    _set3(comult, d, idx(k1, k2), idx(i1, i2), idx(j1, j2), c1 * c2)
    unit = [CYC_ZERO] * d
    counit = [CYC_ZERO] * d
    for a in range(d1):
        for b in range(d2):
            unit[idx(a, b)] = h1.unit.coords[a] * h2.unit.coords[b]
            counit[idx(a, b)] = h1.counit.coords[a] * h2.counit.coords[b]
    antipode = Mat.zero(d, d)
    for a in range(d1):
        for i in range(d1):
            ca = h1.antipode.get(a, i)
            if ca.is_zero():
                continue
            for b in range(d2):
                for j in range(d2):
                    cb = h2.antipode.get(b, j)
                    if cb.is_zero():
                        continue
                    antipode.entries[idx(a, b) * d + idx(i, j)] = ca * cb
    star = None
    if h1.star is not None and h2.star is not None:
        star = Mat.zero(d, d)
        for a in range(d1):
            for i in range(d1):
                ca = h1.star.get(a, i)
                if ca.is_zero():
                    continue
                for b in range(d2):
                    for j in range(d2):
                        cb = h2.star.get(b, j)
                        if cb.is_zero():
                            continue
                        star.entries[idx(a, b) * d + idx(i, j)] = ca * cb
    return HopfData(name=name, dim=d, field_order=fo,
                    mult=Tensor3(d, mult), unit=Elem(tuple(unit)),
                    comult=Tensor3(d, comult), counit=Functional(tuple(counit)),
                    antipode=antipode, star=star)


def standard_zoo() -> list:
    """The fixed list of algebras every cross-cutting test runs over."""
    out = [
        group_algebra("C[Z2]", cyclic_table(2)),
        group_algebra("C[Z3]", cyclic_table(3)),
        group_algebra("C[Z6]", cyclic_table(6)),
        group_algebra("C[S3]", symmetric_table_s3()),
        function_algebra("F(Z2)", cyclic_table(2)),
        function_algebra("F(Z3)", cyclic_table(3)),
        function_algebra("F(Z6)", cyclic_table(6)),
        function_algebra("F(S3)", symmetric_table_s3()),
        sweedler(),
        taft(2),
        taft(3),
    ]
    out.append(tensor_product("sweedler(x)C[Z2]", sweedler(),
                              group_algebra("C[Z2]", cyclic_table(2))))
    out.append(tensor_product("sweedler(x)sweedler", sweedler(), sweedler()))
    return out


def zoo_names() -> list:
    return [h.name for h in standard_zoo()]
