"""Command line front end: JSON in, JSON out.

Verbs cover the raw combinatorics (comp, perm), the poset Hopf algebra,
QSym arithmetic and the maps into it, character evaluation, the
enumeration oracles, batch verification suites, and dimension tables.
Payloads come from --in as inline JSON, a file path, or - for stdin.
Parse failures exit 2 and domain violations exit 3, each with a JSON
error object naming the problem; failed verifications exit 1.
"""

import argparse
import json
import random
import sys

from . import characters as ch
from . import combinat as cb
from . import oracle as oc
from . import poset as ps
from . import qsym as qs
from .terms import coeff_from_json, coeff_to_json, iadd


class ParseFailure(Exception):
    pass


def _expect(cond, msg):
    if not cond:
        raise ParseFailure(msg)


# --- payload parsing ------------------------------------------------------

def _load(args):
    raw = args.infile
    _expect(raw is not None, "--in is required for this command")
    if raw == "-":
        raw = sys.stdin.read()
    elif not raw.lstrip().startswith(("{", "[")):
        try:
            with open(raw) as fh:
                raw = fh.read()
        except OSError as exc:
            raise ParseFailure("cannot read %s: %s" % (args.infile, exc))
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ParseFailure("invalid JSON at line %d column %d: %s"
                           % (exc.lineno, exc.colno, exc.msg))


def _payload_m(payload, args):
    _expect(isinstance(payload, dict), "payload must be a JSON object")
    m = payload.get("m", args.m)
    _expect(m is not None, "m must appear in the payload or as --m")
    _expect(isinstance(m, int) and not isinstance(m, bool),
            "m must be an integer")
    if args.m is not None and "m" in payload and payload["m"] != args.m:
        raise ParseFailure("--m disagrees with the payload's m")
    return m


def _pairs(obj, what):
    _expect(isinstance(obj, list), "%s must be a JSON array" % what)
    out = []
    for item in obj:
        _expect(isinstance(item, list) and len(item) == 2
                and all(isinstance(x, int) and not isinstance(x, bool)
                        for x in item),
                "%s entries must be [integer, integer] pairs" % what)
        out.append((item[0], item[1]))
    return tuple(out)


def parse_comp(payload, args, key="comp"):
    m = _payload_m(payload, args)
    _expect(key in payload, "payload needs a %r field" % key)
    alpha = _pairs(payload[key], key)
    cb.check_comp(alpha, m)
    return m, alpha


def parse_perm(payload, args, key="perm"):
    m = _payload_m(payload, args)
    _expect(key in payload, "payload needs a %r field" % key)
    pi = _pairs(payload[key], key)
    cb.check_perm(pi, m)
    return m, pi


def parse_poset(payload, args):
    m = _payload_m(payload, args)
    _expect("elements" in payload, "payload needs an 'elements' field")
    elements = _pairs(payload["elements"], "elements")
    covers = _pairs(payload.get("covers", []), "covers")
    return ps.make_poset(m, elements, covers)


def parse_qsym(payload, args):
    m = _payload_m(payload, args)
    basis = payload.get("basis")
    _expect(basis in qs.BASES, "basis must be one of %r" % (qs.BASES,))
    raw = payload.get("terms", [])
    _expect(isinstance(raw, list), "terms must be a JSON array")
    terms = {}
    for item in raw:
        _expect(isinstance(item, dict) and "comp" in item and "coeff" in item,
                "each term needs 'comp' and 'coeff'")
        alpha = _pairs(item["comp"], "comp")
        cb.check_comp(alpha, m)
        try:
            c = coeff_from_json(item["coeff"])
        except ValueError as exc:
            raise ParseFailure(str(exc))
        iadd(terms, alpha, c)
    return qs.QElt(m, basis, terms)


def _sub_payload(payload, key):
    _expect(isinstance(payload, dict) and key in payload,
            "payload needs a %r field" % key)
    sub = payload[key]
    _expect(isinstance(sub, dict), "%r must be a JSON object" % key)
    return sub


# --- serialization --------------------------------------------------------

def comp_json(alpha):
    return [[s, c] for s, c in alpha]


def perm_json(pi):
    return [[v, c] for v, c in pi]


def qsym_json(e):
    return {"m": e.m, "basis": e.basis,
            "terms": [{"coeff": coeff_to_json(c), "comp": comp_json(a)}
                      for a, c in sorted(e.terms.items())]}


def poset_json(P):
    return {"m": P.m,
            "elements": [[v, c] for v, c in P.elements()],
            "covers": [[a, b] for a, b in P.cover_pairs()]}


def pelt_json(e):
    order = sorted(e.terms.items(), key=lambda kv: kv[0].sort_key())
    return {"m": e.m,
            "terms": [{"coeff": coeff_to_json(c), "poset": poset_json(P)}
                      for P, c in order]}


def qsym_tensor_json(m, basis, pairs):
    order = sorted(pairs.items())
    return {"m": m, "basis": basis,
            "terms": [{"coeff": coeff_to_json(c),
                       "left": comp_json(a), "right": comp_json(b)}
                      for (a, b), c in order]}


def poset_tensor_json(m, pairs):
    order = sorted(pairs.items(),
                   key=lambda kv: (kv[0][0].sort_key(), kv[0][1].sort_key()))
    return {"m": m,
            "terms": [{"coeff": coeff_to_json(c),
                       "ideal": poset_json(I), "rest": poset_json(R)}
                      for (I, R), c in order]}


def tpoly_json(p):
    return {"N": p.N, "m": p.m,
            "terms": [{"exps": [[i, j, e] for (i, j), e in key],
                       "coeff": coeff_to_json(c)}
                      for key, c in sorted(p.terms.items())]}


# --- comp and perm verbs --------------------------------------------------

def _require_m(args):
    _expect(args.m is not None, "--m is required for this command")
    if args.m < 1:
        raise ValueError("m must be >= 1")
    return args.m


def cmd_comp(args):
    op = args.op
    if op == "enumerate":
        m = _require_m(args)
        maxn = args.max_n if args.max_n is not None else 4
        return {"m": m,
                "rows": [{"n": n,
                          "comps": [comp_json(a)
                                    for a in cb.enumerate_compositions(m, n)]}
                         for n in range(maxn + 1)]}
    if op == "enumerate-peak":
        m = _require_m(args)
        maxn = args.max_n if args.max_n is not None else 4
        return {"m": m,
                "rows": [{"n": n,
                          "comps": [comp_json(a)
                                    for a in cb.peak_compositions(m, n)]}
                         for n in range(maxn + 1)]}
    m, alpha = parse_comp(_load(args), args)
    if op == "check":
        return {"m": m, "weight": cb.weight(alpha), "length": len(alpha),
                "peak": cb.is_peak_composition(alpha)}
    if op == "star":
        return {"m": m, "comp": comp_json(cb.star(alpha))}
    if op == "hat":
        return {"m": m, "comp": comp_json(cb.hat(alpha))}
    if op == "conjugate":
        return {"m": m, "comp": comp_json(cb.conjugate(alpha))}
    if op == "reverse":
        return {"m": m, "comp": comp_json(cb.reverse(alpha))}
    if op == "rainbow":
        return {"m": m,
                "blocks": [{"sizes": list(sizes), "color": color}
                           for sizes, color in cb.rainbow_decompose(alpha)]}
    if op == "refinements":
        return {"m": m, "comps": [comp_json(b)
                                  for b in sorted(cb.refinements(alpha))]}
    if op == "coarsenings":
        return {"m": m, "comps": [comp_json(b)
                                  for b in sorted(cb.coarsenings(alpha))]}
    if op == "rep-chain":
        return {"m": m, "perm": perm_json(cb.rep_chain(alpha))}
    raise ParseFailure("unknown comp operation %r" % op)


def cmd_perm(args):
    op = args.op
    payload = _load(args)
    if op == "shuffle":
        m = _payload_m(payload, args)
        _, left = parse_perm(dict(payload, m=m), args, key="left")
        _, right = parse_perm(dict(payload, m=m), args, key="right")
        words = sorted(cb.shuffles(left, right))
        return {"m": m, "perms": [perm_json(w) for w in words]}
    m, pi = parse_perm(payload, args)
    if op == "check":
        return {"m": m, "size": len(pi)}
    if op == "descent-comp":
        return {"m": m, "comp": comp_json(cb.descent_composition(pi))}
    if op == "peak-comp":
        return {"m": m, "comp": comp_json(cb.peak_composition(pi))}
    if op == "peak-set":
        return {"m": m, "peaks": list(cb.peak_set(pi))}
    if op == "standardize":
        return {"m": m, "perm": perm_json(cb.standardize(pi))}
    raise ParseFailure("unknown perm operation %r" % op)


# --- poset verb -----------------------------------------------------------

def cmd_poset(args):
    op = args.op
    if op == "count":
        m = _require_m(args)
        maxn = args.max_n if args.max_n is not None else 4
        return {"m": m,
                "rows": [{"n": n, "classes": len(ps.canonical_posets(m, n))}
                         for n in range(maxn + 1)]}
    payload = _load(args)
    if op == "equivalent":
        first = parse_poset(_sub_payload(payload, "first"), args)
        second = parse_poset(_sub_payload(payload, "second"), args)
        if first.m != second.m:
            raise ValueError("operands must share the same number of colors")
        return {"equivalent": ps.equivalent(first, second)}
    if op == "product":
        first = parse_poset(_sub_payload(payload, "first"), args)
        second = parse_poset(_sub_payload(payload, "second"), args)
        return poset_json(ps.disjoint_union(first, second))
    P = parse_poset(payload, args)
    if op == "check":
        return {"m": P.m, "size": P.n, "canonical": P.is_canonical()}
    if op == "canonical":
        return poset_json(P.canonical)
    if op == "ideals":
        vals = []
        for mask in P.ideal_masks():
            vals.append([P.values[i] for i in range(P.n) if mask >> i & 1])
        vals.sort(key=lambda v: (len(v), v))
        return {"m": P.m, "count": len(vals), "ideals": vals}
    if op == "extensions":
        words = sorted(P.linear_extensions())
        return {"m": P.m, "perms": [perm_json(w) for w in words]}
    if op == "coproduct":
        pairs = ps.coproduct(ps.PElt.basis(P.canonical))
        return poset_tensor_json(P.m, pairs)
    if op == "antipode":
        e = ps.antipode(ps.PElt.basis(P.canonical), route=args.route)
        return pelt_json(e)
    raise ParseFailure("unknown poset operation %r" % op)


# --- qsym verb ------------------------------------------------------------

def _to_fundamental(e):
    if e.basis == "F":
        return e
    if e.basis == "M":
        return qs.m_to_f(e)
    return qs.m_to_f(qs.to_monomial(e))


def cmd_qsym(args):
    op = args.op
    payload = _load(args)
    if op == "product":
        first = parse_qsym(_sub_payload(payload, "first"), args)
        second = parse_qsym(_sub_payload(payload, "second"), args)
        return qsym_json(qs.multiply(first, second))
    if op in ("gamma", "lambda"):
        P = parse_poset(payload, args).canonical
        fn = qs.ppartition_gf if op == "gamma" else qs.enriched_gf
        return qsym_json(fn(P))
    e = parse_qsym(payload, args)
    if op == "convert":
        target = args.basis
        _expect(target is not None, "--basis selects the target basis")
        if target == e.basis:
            return qsym_json(e)
        if target == "M":
            return qsym_json(qs.to_monomial(e))
        if target == "F":
            return qsym_json(_to_fundamental(e))
        raise ValueError("no conversion into the K basis; K spans only the "
                         "peak subalgebra")
    if op == "coproduct":
        return qsym_tensor_json(e.m, e.basis, qs.coproduct(e))
    if op == "antipode":
        if args.route == "inductive":
            return qsym_json(qs.antipode_inductive(e))
        return qsym_json(qs.antipode(e))
    if op == "counit":
        return {"m": e.m, "value": coeff_to_json(qs.counit(e))}
    if op == "theta":
        return qsym_json(qs.peak_projection(_to_fundamental(e)))
    raise ParseFailure("unknown qsym operation %r" % op)


# --- char verb ------------------------------------------------------------

_CHAR_FAMILIES = {
    "zetaQ": ("qsym", ch.zeta_qsym, ch.zeta_qsym_all),
    "zetaP": ("poset", ch.zeta_poset, ch.zeta_poset_all),
    "nuQ": ("qsym", ch.nu_qsym, ch.nu_qsym_all),
    "nuP": ("poset", ch.nu_poset, ch.nu_poset_all),
}


def _resolve_character(name, m):
    """A built-in character by CLI name; returns (kind, character)."""
    if name == "counit":
        return "either", None
    base, _, suffix = name.partition(":")
    if base not in _CHAR_FAMILIES:
        raise ParseFailure("unknown character %r" % name)
    kind, single, full = _CHAR_FAMILIES[base]
    if suffix == "":
        return kind, full(m)
    try:
        j = int(suffix)
    except ValueError:
        raise ParseFailure("character color must be an integer, got %r" % name)
    if not 0 <= j < m:
        raise ValueError("composition colors must lie in range(m)")
    return kind, single(m, j)


def _char_argument(payload, args, kind):
    """Build the Hopf element a character consumes, sniffing the payload."""
    if kind == "either":
        kind = "qsym" if "basis" in payload else "poset"
    if kind == "qsym":
        return kind, parse_qsym(payload, args)
    return kind, ps.PElt.basis(parse_poset(payload, args).canonical)


def cmd_char(args):
    payload = _load(args)
    m = _payload_m(payload, args)
    if args.op == "eval":
        kind, phi = _resolve_character(args.name, m)
        kind, elt = _char_argument(payload, args, kind)
        if phi is None:
            dom = ch.qsym_domain(m) if kind == "qsym" else ch.poset_domain(m)
            phi = ch.counit_character(dom)
        if phi.domain.m != m:
            raise ValueError("operands must share the same number of colors")
        return {"name": phi.name, "m": m, "value": coeff_to_json(phi(elt))}
    if args.op == "psi":
        base = args.name
        if base not in _CHAR_FAMILIES:
            raise ParseFailure("unknown character family %r" % base)
        kind, single, _ = _CHAR_FAMILIES[base]
        kind, elt = _char_argument(payload, args, kind)
        chars = [single(m, j) for j in range(m)]
        return qsym_json(ch.universal_morphism(elt, chars))
    raise ParseFailure("unknown char operation %r" % args.op)


# --- oracle verb ----------------------------------------------------------

def cmd_oracle(args):
    N = args.max_N if args.max_N is not None else 2
    if N < 1:
        raise ValueError("truncation level must be >= 1")
    payload = _load(args)
    if args.op == "truncate":
        return tpoly_json(oc.truncate(parse_qsym(payload, args), N))
    P = parse_poset(payload, args)
    if args.op == "ppartitions":
        return tpoly_json(oc.enumerate_ppartitions(P, N))
    if args.op == "enriched":
        return tpoly_json(oc.enumerate_enriched(P, N))
    if args.op == "split-check":
        ok = oc.split_alphabet_check(P, N)
        return {"N": N, "ok": ok}, (0 if ok else 1)
    raise ParseFailure("unknown oracle operation %r" % args.op)


# --- verify suites --------------------------------------------------------

def _scan(name, items, test, describe):
    checked = 0
    for it in items:
        checked += 1
        if not test(it):
            return {"name": name, "ok": False, "checked": checked,
                    "counterexample": describe(it)}
    return {"name": name, "ok": True, "checked": checked,
            "counterexample": None}


def _poset_grid(m, max_n):
    return [P for n in range(max_n + 1) for P in ps.canonical_posets(m, n)]


def _comp_grid(m, max_n):
    return [a for n in range(max_n + 1)
            for a in cb.enumerate_compositions(m, n)]


def _size_pairs(grid, max_total):
    bysize = {}
    for P in grid:
        bysize.setdefault(P.n, []).append(P)
    out = []
    for i, firsts in sorted(bysize.items()):
        for j, seconds in sorted(bysize.items()):
            if i + j <= max_total:
                out.extend((A, B) for A in firsts for B in seconds)
    return out


def _poset_counit_ok(P):
    left, right = {}, {}
    for I, R in P.splits():
        if I.n == 0:
            iadd(left, R, 1)
        if R.n == 0:
            iadd(right, I, 1)
    return left == {P: 1} == right


def _poset_coassoc_ok(P):
    lhs, rhs = {}, {}
    for I, R in P.splits():
        for I2, R2 in I.splits():
            iadd(lhs, (I2, R2, R), 1)
        for I2, R2 in R.splits():
            iadd(rhs, (I, I2, R2), 1)
    return lhs == rhs


def _poset_bialgebra_ok(pair):
    A, B = pair
    lhs = {}
    for I, R in ps.product_key(A, B).splits():
        iadd(lhs, (I, R), 1)
    rhs = {}
    for I1, R1 in A.splits():
        for I2, R2 in B.splits():
            iadd(rhs, (ps.product_key(I1, I2), ps.product_key(R1, R2)), 1)
    return lhs == rhs


def _poset_antipode_ok(P):
    left, right = {}, {}
    for I, R in P.splits():
        for Q, c in ps.antipode_key(I).items():
            iadd(left, ps.product_key(Q, R), c)
        for Q, c in ps.antipode_key(R).items():
            iadd(right, ps.product_key(I, Q), c)
    want = {P: 1} if P.n == 0 else {}
    return left == want and right == want


def _m_elt(m, alpha):
    return qs.QElt.basis_elt(m, "M", alpha)


def _deconcats(alpha):
    return [(alpha[:i], alpha[i:]) for i in range(len(alpha) + 1)]


def _qsym_counit_ok(key):
    m, alpha = key
    left, right = {}, {}
    for a, b in _deconcats(alpha):
        if not a:
            iadd(left, b, 1)
        if not b:
            iadd(right, a, 1)
    return left == {alpha: 1} == right


def _qsym_coassoc_ok(key):
    m, alpha = key
    lhs, rhs = {}, {}
    for a, b in _deconcats(alpha):
        for a1, a2 in _deconcats(a):
            iadd(lhs, (a1, a2, b), 1)
        for b1, b2 in _deconcats(b):
            iadd(rhs, (a, b1, b2), 1)
    return lhs == rhs


def _qsym_bialgebra_ok(key):
    m, alpha, beta = key
    ea, eb = _m_elt(m, alpha), _m_elt(m, beta)
    lhs = qs.coproduct(qs.to_monomial(qs.multiply(ea, eb)))
    rhs = {}
    for a1, a2 in _deconcats(alpha):
        for b1, b2 in _deconcats(beta):
            p1 = qs.to_monomial(qs.multiply(_m_elt(m, a1), _m_elt(m, b1)))
            p2 = qs.to_monomial(qs.multiply(_m_elt(m, a2), _m_elt(m, b2)))
            for k1, c1 in p1.terms.items():
                for k2, c2 in p2.terms.items():
                    iadd(rhs, (k1, k2), c1 * c2)
    return lhs == rhs


def _qsym_antipode_ok(key):
    m, alpha = key
    left, right = {}, {}
    for a, b in _deconcats(alpha):
        sa = qs.antipode(_m_elt(m, a))
        for k, c in qs.to_monomial(qs.multiply(sa, _m_elt(m, b))).terms.items():
            iadd(left, k, c)
        sb = qs.antipode(_m_elt(m, b))
        for k, c in qs.to_monomial(qs.multiply(_m_elt(m, a), sb)).terms.items():
            iadd(right, k, c)
    want = {(): 1} if not alpha else {}
    return left == want and right == want


def _gamma_coalgebra_ok(P):
    lhs = qs.coproduct(qs.ppartition_gf(P))
    rhs = {}
    for I, R in P.splits():
        for a, ca in qs.ppartition_gf(I).terms.items():
            for b, cbb in qs.ppartition_gf(R).terms.items():
                iadd(rhs, (a, b), ca * cbb)
    return lhs == rhs


def _lambda_coalgebra_ok(P):
    lhs = qs.coproduct(qs.enriched_gf(P))
    rhs = {}
    for I, R in P.splits():
        for a, ca in qs.enriched_gf(I).terms.items():
            for b, cbb in qs.enriched_gf(R).terms.items():
                iadd(rhs, (a, b), ca * cbb)
    return lhs == rhs


def _suite_hopf_axioms(m, max_n, max_N, seed):
    max_n = 5 if max_n is None else max_n
    grid = _poset_grid(m, max_n)
    pairs = _size_pairs(grid, max_n)
    qn = min(max_n, 4)
    keys = [(m, a) for a in _comp_grid(m, qn)]
    prods = [(m, a, b) for _, a in keys for _, b in keys
             if cb.weight(a) + cb.weight(b) <= qn]
    pj = lambda P: poset_json(P)
    pj2 = lambda pr: {"first": poset_json(pr[0]), "second": poset_json(pr[1])}
    kj = lambda k: {"comp": comp_json(k[1])}
    kj2 = lambda k: {"first": comp_json(k[1]), "second": comp_json(k[2])}
    return [
        _scan("poset-counit", grid, _poset_counit_ok, pj),
        _scan("poset-coassociativity", grid, _poset_coassoc_ok, pj),
        _scan("poset-bialgebra", pairs, _poset_bialgebra_ok, pj2),
        _scan("poset-antipode", grid, _poset_antipode_ok, pj),
        _scan("qsym-counit", keys, _qsym_counit_ok, kj),
        _scan("qsym-coassociativity", keys, _qsym_coassoc_ok, kj),
        _scan("qsym-bialgebra", prods, _qsym_bialgebra_ok, kj2),
        _scan("qsym-antipode", keys, _qsym_antipode_ok, kj),
    ]


def _suite_gamma_morphism(m, max_n, max_N, seed):
    max_n = 5 if max_n is None else max_n
    grid = _poset_grid(m, max_n)
    pairs = _size_pairs(grid, max_n)
    return [
        _scan("gamma-algebra", pairs,
              lambda pr: qs.multiply(qs.ppartition_gf(pr[0]),
                                     qs.ppartition_gf(pr[1]))
              == qs.ppartition_gf(ps.product_key(pr[0], pr[1])),
              lambda pr: {"first": poset_json(pr[0]),
                          "second": poset_json(pr[1])}),
        _scan("gamma-coalgebra", grid, _gamma_coalgebra_ok, poset_json),
    ]


def _suite_lambda_morphism(m, max_n, max_N, seed):
    max_n = 5 if max_n is None else max_n
    grid = _poset_grid(m, max_n)
    pairs = _size_pairs(grid, max_n)
    return [
        _scan("lambda-algebra", pairs,
              lambda pr: qs.multiply(qs.enriched_gf(pr[0]),
                                     qs.enriched_gf(pr[1]))
              == qs.enriched_gf(ps.product_key(pr[0], pr[1])),
              lambda pr: {"first": poset_json(pr[0]),
                          "second": poset_json(pr[1])}),
        _scan("lambda-coalgebra", grid, _lambda_coalgebra_ok, poset_json),
    ]


def _suite_theta_morphism(m, max_n, max_N, seed):
    max_n = 5 if max_n is None else max_n
    grid = _poset_grid(m, max_n)
    comps = _comp_grid(m, max_n)
    cpairs = [(a, b) for a in comps for b in comps
              if cb.weight(a) + cb.weight(b) <= max_n]
    fe = lambda a: qs.QElt.basis_elt(m, "F", a)
    return [
        _scan("theta-after-gamma", grid,
              lambda P: qs.peak_projection(qs.ppartition_gf(P))
              == qs.enriched_gf(P),
              poset_json),
        _scan("theta-antipode-commutes", comps,
              lambda a: qs.peak_projection(qs.antipode(fe(a)))
              == qs.antipode(qs.peak_projection(fe(a))),
              lambda a: {"comp": comp_json(a)}),
        _scan("theta-algebra", cpairs,
              lambda pr: qs.peak_projection(qs.multiply(fe(pr[0]), fe(pr[1])))
              == qs.multiply(qs.peak_projection(fe(pr[0])),
                             qs.peak_projection(fe(pr[1]))),
              lambda pr: {"first": comp_json(pr[0]),
                          "second": comp_json(pr[1])}),
    ]


def _suite_antipode_consistency(m, max_n, max_N, seed):
    max_n = 4 if max_n is None else max_n
    grid = _poset_grid(m, max_n)
    comps = _comp_grid(m, max_n)
    peaks = [a for n in range(max_n + 1) for a in cb.peak_compositions(m, n)]
    cjson = lambda a: {"comp": comp_json(a)}
    return [
        _scan("monomial-closed-vs-inductive", comps,
              lambda a: qs.antipode(_m_elt(m, a))
              == qs.antipode_inductive_key(a, m),
              cjson),
        _scan("fundamental-vs-monomial-route", comps,
              lambda a: qs.to_monomial(
                  qs.antipode(qs.QElt.basis_elt(m, "F", a)))
              == qs.antipode(qs.f_to_m(qs.QElt.basis_elt(m, "F", a))),
              cjson),
        _scan("peak-vs-monomial-route", peaks,
              lambda a: qs.to_monomial(
                  qs.antipode(qs.QElt.basis_elt(m, "K", a)))
              == qs.antipode(qs.to_monomial(qs.QElt.basis_elt(m, "K", a))),
              cjson),
        _scan("poset-inductive-vs-chains", grid,
              lambda P: ps.antipode_key(P) == ps.antipode_chains_key(P),
              poset_json),
    ]


def _suite_oracle_equivalence(m, max_n, max_N, seed):
    max_n = 4 if max_n is None else max_n
    max_N = 2 if max_N is None else max_N
    grid = _poset_grid(m, max_n)
    cases = [(P, N) for P in grid for N in range(1, max_N + 1)]
    pairs = _size_pairs(grid, max_n)
    cj = lambda case: {"poset": poset_json(case[0]), "N": case[1]}
    return [
        _scan("ppartitions-vs-gamma", cases,
              lambda case: oc.enumerate_ppartitions(case[0], case[1])
              == oc.truncate(qs.ppartition_gf(case[0]), case[1]),
              cj),
        _scan("enriched-vs-lambda", cases,
              lambda case: oc.enumerate_enriched(case[0], case[1])
              == oc.truncate(qs.enriched_gf(case[0]), case[1]),
              cj),
        _scan("oracle-product-law", pairs,
              lambda pr: oc.enumerate_ppartitions(
                  ps.disjoint_union(pr[0], pr[1]), max_N)
              == oc.enumerate_ppartitions(pr[0], max_N)
              * oc.enumerate_ppartitions(pr[1], max_N),
              lambda pr: {"first": poset_json(pr[0]),
                          "second": poset_json(pr[1])}),
        _scan("split-alphabet", grid,
              lambda P: oc.split_alphabet_check(P, max_N),
              poset_json),
        _scan("extension-partition", grid,
              lambda P: _extension_partition_ok(P, max_N),
              poset_json),
    ]


def _extension_partition_ok(P, N):
    whole = oc.enumerate_ppartitions(P, N)
    acc = oc.TPoly(N, P.m, {})
    for pi in P.linear_extensions():
        acc = acc + oc.enumerate_ppartitions(ps.chain_poset(P.m, pi), N)
    return acc == whole


def _suite_character_group(m, max_n, max_N, seed):
    max_n = 4 if max_n is None else max_n
    keys = _comp_grid(m, max_n)
    grid = _poset_grid(m, max_n)
    gens = []
    for j in range(m):
        z = ch.zeta_qsym(m, j)
        gens.extend([z, ch.bar(z), ch.inverse(z)])
    rng = random.Random(seed)
    triples = [tuple(rng.choice(gens) for _ in range(3)) for _ in range(12)]

    def assoc_ok(tr):
        a, b, c = tr
        lhs = ch.convolve(ch.convolve(a, b), c)
        rhs = ch.convolve(a, ch.convolve(b, c))
        return all(lhs.of_key(k) == rhs.of_key(k) for k in keys)

    def inverse_ok(phi):
        li = ch.convolve(ch.inverse(phi), phi)
        ri = ch.convolve(phi, ch.inverse(phi))
        return all(li.of_key(k) == ri.of_key(k) == (1 if not k else 0)
                   for k in keys)

    def pullback_ok(arg):
        j, P = arg
        if j is None:
            zp, zq = ch.zeta_poset_all(m), ch.zeta_qsym_all(m)
        else:
            zp, zq = ch.zeta_poset(m, j), ch.zeta_qsym(m, j)
        return zp.of_key(P) == zq(qs.ppartition_gf(P))

    pulls = [(j, P) for j in list(range(m)) + [None] for P in grid]
    return [
        _scan("convolution-associativity", triples, assoc_ok,
              lambda tr: {"names": [p.name for p in tr]}),
        _scan("two-sided-inverse", gens, inverse_ok,
              lambda p: {"name": p.name}),
        _scan("zeta-pullback-along-gamma", pulls, pullback_ok,
              lambda arg: {"color": arg[0], "poset": poset_json(arg[1])}),
    ]


def _suite_nu_counting(m, max_n, max_N, seed):
    max_n = 4 if max_n is None else max_n
    grid = _poset_grid(m, max_n)

    def single_ok(arg):
        j, P = arg
        if P.n == 0:
            return ch.nu_poset(m, j).of_key(P) == 1
        cnt = sum(1 for pi in P.linear_extensions()
                  if all(c == j for _, c in pi) and not cb.peak_set(pi))
        return ch.nu_poset(m, j).of_key(P) == 2 * cnt

    def full_ok(P):
        if P.n == 0:
            return ch.nu_poset_all(m).of_key(P) == 1
        k = len(set(P.colors))
        cnt = 0
        for pi in P.linear_extensions():
            cols = [c for _, c in pi]
            if all(cols[i] <= cols[i + 1] for i in range(len(cols) - 1)) \
                    and not cb.peak_set(pi):
                cnt += 1
        return ch.nu_poset_all(m).of_key(P) == (1 << k) * cnt

    def lambda_ok(P):
        return ch.nu_poset_all(m).of_key(P) \
            == ch.zeta_qsym_all(m)(qs.enriched_gf(P))

    def odd_ok(arg):
        j, P = arg
        phi = ch.nu_poset(m, j)
        return ch.bar(phi).of_key(P) == ch.inverse(phi).of_key(P)

    singles = [(j, P) for j in range(m) for P in grid]
    return [
        _scan("nu-single-color-counting", singles, single_ok,
              lambda arg: {"color": arg[0], "poset": poset_json(arg[1])}),
        _scan("nu-full-counting", grid, full_ok, poset_json),
        _scan("nu-equals-zeta-after-lambda", grid, lambda_ok, poset_json),
        _scan("nu-oddness", singles, odd_ok,
              lambda arg: {"color": arg[0], "poset": poset_json(arg[1])}),
    ]


def _suite_dimension_counts(m, max_n, max_N, seed):
    max_n = 5 if max_n is None else max_n
    levels = list(range(1, max_n + 1))

    def qsym_ok(n):
        return len(cb.enumerate_compositions(m, n)) == m * (m + 1) ** (n - 1)

    def peak_ok(n):
        return len(cb.peak_compositions(m, n)) \
            == cb.count_peak_compositions(m, n)

    return [
        _scan("qsym-dimension-formula", levels, qsym_ok, lambda n: {"n": n}),
        _scan("peak-dimension-recurrence", levels, peak_ok,
              lambda n: {"n": n}),
    ]


_SUITES = {
    "hopf-axioms": _suite_hopf_axioms,
    "gamma-morphism": _suite_gamma_morphism,
    "lambda-morphism": _suite_lambda_morphism,
    "theta-morphism": _suite_theta_morphism,
    "antipode-consistency": _suite_antipode_consistency,
    "oracle-equivalence": _suite_oracle_equivalence,
    "character-group": _suite_character_group,
    "nu-counting": _suite_nu_counting,
    "dimension-counts": _suite_dimension_counts,
}


def cmd_verify(args):
    name = args.suite
    _expect(name is not None, "--suite NAME is required; one of %s"
            % ", ".join(sorted(_SUITES)))
    _expect(name in _SUITES, "unknown suite %r; one of %s"
            % (name, ", ".join(sorted(_SUITES))))
    m = args.m if args.m is not None else 2
    if m < 1:
        raise ValueError("m must be >= 1")
    checks = _SUITES[name](m, args.max_n, args.max_N, args.seed)
    ok = all(c["ok"] for c in checks)
    report = {"suite": name, "m": m, "checks": checks, "ok": ok}
    return report, (0 if ok else 1)


def cmd_dims(args):
    m = _require_m(args)
    maxn = args.max_n if args.max_n is not None else 5
    rows = []
    for n in range(1, maxn + 1):
        rows.append({"n": n,
                     "qsym": len(cb.enumerate_compositions(m, n)),
                     "peak": cb.count_peak_compositions(m, n)})
    return {"m": m, "rows": rows}


# --- wiring ---------------------------------------------------------------

def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=int, default=None)
    common.add_argument("--max-n", dest="max_n", type=int, default=None)
    common.add_argument("--max-N", dest="max_N", type=int, default=None)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--in", dest="infile", default=None,
                        help="inline JSON, a file path, or - for stdin")
    common.add_argument("--suite", default=None)
    common.add_argument("--basis", choices=qs.BASES, default=None)
    common.add_argument("--json-indent", dest="json_indent", type=int,
                        default=None)

    ap = argparse.ArgumentParser(
        prog="cqsym",
        description="Colored quasisymmetric functions, colored labeled "
                    "posets, and their Hopf algebra maps.")
    sub = ap.add_subparsers(dest="verb", required=True)

    def add(verb, ops, fn, extra=None):
        p = sub.add_parser(verb, parents=[common])
        if ops:
            p.add_argument("op", choices=ops)
        if extra:
            extra(p)
        p.set_defaults(fn=fn)

    add("comp", ["check", "star", "hat", "conjugate", "reverse", "rainbow",
                 "refinements", "coarsenings", "rep-chain", "enumerate",
                 "enumerate-peak"], cmd_comp)
    add("perm", ["check", "descent-comp", "peak-comp", "peak-set",
                 "standardize", "shuffle"], cmd_perm)
    add("poset", ["check", "canonical", "equivalent", "ideals", "extensions",
                  "product", "coproduct", "antipode", "count"], cmd_poset,
        lambda p: p.add_argument("--route", choices=("inductive", "chains"),
                                 default="inductive"))
    add("qsym", ["convert", "product", "coproduct", "antipode", "counit",
                 "gamma", "lambda", "theta"], cmd_qsym,
        lambda p: p.add_argument("--route", choices=("closed", "inductive"),
                                 default="closed"))
    add("char", ["eval", "psi"], cmd_char,
        lambda p: p.add_argument("name"))
    add("oracle", ["ppartitions", "enriched", "truncate", "split-check"],
        cmd_oracle)
    add("verify", None, cmd_verify)
    add("dims", None, cmd_dims)
    return ap


def _emit(obj, args):
    indent = getattr(args, "json_indent", None)
    print(json.dumps(obj, indent=indent))


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        out = args.fn(args)
    except ParseFailure as exc:
        _emit({"error": {"type": "parse", "detail": str(exc)}}, args)
        return 2
    except ValueError as exc:
        _emit({"error": {"type": "domain", "invariant": str(exc)}}, args)
        return 3
    code = 0
    if isinstance(out, tuple):
        out, code = out
    _emit(out, args)
    return code


if __name__ == "__main__":
    sys.exit(main())
