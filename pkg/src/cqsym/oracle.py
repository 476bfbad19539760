"""Brute-force enumeration oracles over truncated alphabets.

Everything here counts maps directly, with no algebra: colored P-partitions
and their enriched variant into the first N index levels, plus exact
truncation of QSym elements to the same variables.  Agreement with the
generating functions computed in qsym.py is the differential test the rest
of the package leans on.
"""

from . import qsym as qs
from .terms import iadd


class TPoly:
    """Polynomial in the variables x[i,j], 1 <= i <= N, 0 <= j < m.

    Terms map a sorted tuple of ((i, j), exponent) pairs to a coefficient.
    N records the truncation used to build the polynomial; equality ignores
    it so shifted and doubled alphabets compare by content.
    """

    __slots__ = ("N", "m", "terms")

    def __init__(self, N, m, terms=None):
        self.N = N
        self.m = m
        clean = {}
        if terms:
            for key, c in terms.items():
                if c:
                    clean[tuple(key)] = c
        self.terms = clean

    def __eq__(self, other):
        if not isinstance(other, TPoly):
            return NotImplemented
        return self.m == other.m and self.terms == other.terms

    __hash__ = None

    def __add__(self, other):
        assert self.m == other.m
        out = dict(self.terms)
        for key, c in other.terms.items():
            iadd(out, key, c)
        return TPoly(max(self.N, other.N), self.m, out)

    def __mul__(self, other):
        assert self.m == other.m
        out = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                exps = dict(ka)
                for v, e in kb:
                    exps[v] = exps.get(v, 0) + e
                iadd(out, tuple(sorted(exps.items())), ca * cb)
        return TPoly(max(self.N, other.N), self.m, out)

    def shifted(self, offset):
        """Move every first index up by offset (a later block of levels)."""
        out = {}
        for key, c in self.terms.items():
            out[tuple((((i + offset), j), e) for (i, j), e in key)] = c
        return TPoly(self.N + offset, self.m, out)

    def total(self):
        return sum(self.terms.values())

    def __repr__(self):
        def var(ij, e):
            s = "x[%d,%d]" % ij
            return s if e == 1 else s + "^%d" % e
        bits = []
        for key, c in sorted(self.terms.items()):
            mono = "*".join(var(ij, e) for ij, e in key) or "1"
            bits.append("%s*%s" % (c, mono))
        return " + ".join(bits) if bits else "0"


def _topo(P):
    # indices sorted by how much lies below them; valid since below sets nest
    return sorted(range(P.n), key=lambda i: bin(P.below[i]).count("1"))


def _monomial(levels, colors):
    cnt = {}
    for i, s in enumerate(levels):
        k = (s, colors[i])
        cnt[k] = cnt.get(k, 0) + 1
    return tuple(sorted(cnt.items()))


def enumerate_ppartitions(P, N):
    """Count colored P-partitions with all first indices <= N.

    A map sends each element to a level 1..N, keeping its color.  Along
    every order relation the images must weakly increase in the (level,
    color) order, strictly when the values invert.  Relations are read off
    the transitive closure.
    """
    assert N >= 1
    colors, below = P.colors, P.below
    topo = _topo(P)
    levels = [0] * P.n
    out = {}

    def place(t):
        if t == P.n:
            iadd(out, _monomial(levels, colors), 1)
            return
        b = topo[t]
        kb = colors[b]
        for s in range(1, N + 1):
            ok = True
            rest = below[b]
            while rest:
                bit = rest & -rest
                i = bit.bit_length() - 1
                rest ^= bit
                ka = (levels[i], colors[i])
                if ka > (s, kb) or (ka == (s, kb) and i > b):
                    ok = False
                    break
            if ok:
                levels[b] = s
                place(t + 1)

    place(0)
    return TPoly(N, P.m, out)


def enumerate_enriched(P, N):
    """Count enriched colored P-partitions with all first indices <= N.

    Images carry a sign; the signed alphabet orders by (level, color, sign)
    with minus before plus.  When values run with the order, ties must be
    positive; when they invert, ties must be negative.  The monomial
    forgets the signs.
    """
    assert N >= 1
    colors, below = P.colors, P.below
    topo = _topo(P)
    chosen = [None] * P.n
    out = {}

    def place(t):
        if t == P.n:
            iadd(out, _monomial([s for s, _ in chosen], colors), 1)
            return
        b = topo[t]
        kb = colors[b]
        for s in range(1, N + 1):
            for sg in (0, 1):
                key_b = (s, kb, sg)
                ok = True
                rest = below[b]
                while rest:
                    bit = rest & -rest
                    i = bit.bit_length() - 1
                    rest ^= bit
                    sa, sga = chosen[i]
                    key_a = (sa, colors[i], sga)
                    if key_a > key_b or (key_a == key_b
                                         and sg != (1 if i < b else 0)):
                        ok = False
                        break
                if ok:
                    chosen[b] = (s, sg)
                    place(t + 1)

    place(0)
    return TPoly(N, P.m, out)


def _embeddings(alpha, N):
    # strictly increasing (level, color) supports with colors fixed by alpha
    k = len(alpha)

    def go(t, prev, acc):
        if t == k:
            yield tuple(sorted(acc))
            return
        size, j = alpha[t]
        for i in range(1, N + 1):
            if prev is not None and (i, j) <= prev:
                continue
            yield from go(t + 1, (i, j), acc + [((i, j), size)])

    yield from go(0, None, [])


def truncate(e, N):
    """Exact restriction of a QSym element to first indices 1..N."""
    assert N >= 1
    out = {}
    for alpha, c in qs.to_monomial(e).terms.items():
        for key in _embeddings(alpha, N):
            iadd(out, key, c)
    return TPoly(N, e.m, out)


def split_alphabet_check(P, N):
    """Doubled-alphabet enumeration versus the coproduct, one poset at a time.

    Maps into 2N levels split, by the point where images leave the low
    block, into a P-partition of an order ideal on the low levels and one
    of the complement on the high levels.  Checked by total count and then
    coefficientwise.
    """
    assert N >= 1
    big = enumerate_ppartitions(P, 2 * N)
    full = (1 << P.n) - 1
    acc = TPoly(2 * N, P.m, {})
    total = 0
    for mask in P.ideal_masks():
        lo = enumerate_ppartitions(P.restrict(mask), N)
        hi = enumerate_ppartitions(P.restrict(full & ~mask), N)
        total += lo.total() * hi.total()
        acc = acc + lo * hi.shifted(N)
    return big.total() == total and acc == big
