"""Built-in graded Lie algebras: bases, gradings, total orders, brackets.

Basis elements are plain tuples tagged by kind so they stay hashable and
cheap to compare:

    ("e", n)            Witt-type generator e_n (Witt, WittPositive, CartanW1,
                        Virasoro)
    ("z",)              Virasoro central element
    ("w", i, k)         x^i d_k in W_n, i a length-n tuple of naturals, 1<=k<=n
    ("sa", i)           x^i d_1 in S_n with i_1 = 0
    ("sb", i, k)        i_k x^(i-1_k) d_1 - i_1 x^(i-1_1) d_k in S_n, i_1 >= 1
    ("dh", i)           D_H(x^i) in H_n, i != 0
    ("dk", i)           D_K(x^i) in K_n
    ("E"|"F"|"H", p)    sl2 loop elements e t^p, f t^p, h t^p
    ("x", n), ("y",)    the rank-one example: x_n of degree n, y of degree 1

A Lie element (finite linear combination of basis elements) is a dict
mapping basis element to Fraction with no zero values.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

BasisElement = tuple
LieElement = dict

WITT = "Witt"
WITT_POS = "WittPositive"
CARTAN_W1 = "CartanW1"
VIRASORO = "Virasoro"
CARTAN_W = "CartanW"
SPECIAL_S = "SpecialS"
HAMILTONIAN_H = "HamiltonianH"
CONTACT_K = "ContactK"
LOOP_SL2 = "LoopSl2"
EXAMPLE_D = "ExampleD"

_PARAMETRIC = {CARTAN_W, SPECIAL_S, HAMILTONIAN_H, CONTACT_K}
_FAMILIES = {WITT, WITT_POS, CARTAN_W1, VIRASORO, LOOP_SL2, EXAMPLE_D} | _PARAMETRIC


class InvalidElement(ValueError):
    """Basis element does not belong to the algebra."""


class NotInSn(ValueError):
    """W_n element is not in the span of the S_n basis."""


@dataclass(frozen=True)
class AlgebraSpec:
    """One of the built-in graded Lie algebras, with rank where applicable."""

    family: str
    n: int | None = None

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise ValueError("unknown algebra family: %r" % (self.family,))
        if self.family in _PARAMETRIC:
            if self.n is None or self.n < 2:
                raise ValueError("%s requires a rank n >= 2" % self.family)
            if self.family == HAMILTONIAN_H and self.n % 2 != 0:
                raise ValueError("HamiltonianH requires even rank")
            if self.family == CONTACT_K and (self.n % 2 != 1 or self.n < 3):
                raise ValueError("ContactK requires odd rank >= 3")
        elif self.n is not None:
            raise ValueError("%s takes no rank parameter" % self.family)


def e(n):
    return ("e", int(n))


Z = ("z",)


def w(i, k):
    return ("w", tuple(int(a) for a in i), int(k))


def sa(i):
    return ("sa", tuple(int(a) for a in i))


def sb(i, k):
    return ("sb", tuple(int(a) for a in i), int(k))


def dh(i):
    return ("dh", tuple(int(a) for a in i))


def dk(i):
    return ("dk", tuple(int(a) for a in i))


def loop(root, p):
    return (root, int(p))


def x(n):
    return ("x", int(n))


Y = ("y",)


def _is_index(i, n):
    return (
        isinstance(i, tuple)
        and len(i) == n
        and all(isinstance(a, int) and a >= 0 for a in i)
    )


def validate_element(alg, b):
    """Raise InvalidElement unless b is a basis element of alg."""
    fam = alg.family
    ok = False
    if fam in (WITT, WITT_POS, CARTAN_W1, VIRASORO):
        if isinstance(b, tuple) and len(b) == 2 and b[0] == "e" and isinstance(b[1], int):
            n = b[1]
            ok = (
                fam == WITT
                or fam == VIRASORO
                or (fam == WITT_POS and n >= 1)
                or (fam == CARTAN_W1 and n >= -1)
            )
        elif b == Z:
            ok = fam == VIRASORO
    elif fam == CARTAN_W:
        ok = (
            isinstance(b, tuple)
            and len(b) == 3
            and b[0] == "w"
            and _is_index(b[1], alg.n)
            and isinstance(b[2], int)
            and 1 <= b[2] <= alg.n
        )
    elif fam == SPECIAL_S:
        if isinstance(b, tuple) and b[0] == "sa" and len(b) == 2:
            ok = _is_index(b[1], alg.n) and b[1][0] == 0
        elif isinstance(b, tuple) and b[0] == "sb" and len(b) == 3:
            ok = (
                _is_index(b[1], alg.n)
                and b[1][0] >= 1
                and isinstance(b[2], int)
                and 2 <= b[2] <= alg.n
            )
    elif fam == HAMILTONIAN_H:
        ok = (
            isinstance(b, tuple)
            and len(b) == 2
            and b[0] == "dh"
            and _is_index(b[1], alg.n)
            and any(b[1])
        )
    elif fam == CONTACT_K:
        ok = (
            isinstance(b, tuple)
            and len(b) == 2
            and b[0] == "dk"
            and _is_index(b[1], alg.n)
        )
    elif fam == LOOP_SL2:
        ok = (
            isinstance(b, tuple)
            and len(b) == 2
            and b[0] in ("E", "F", "H")
            and isinstance(b[1], int)
        )
    elif fam == EXAMPLE_D:
        if b == Y:
            ok = True
        else:
            ok = (
                isinstance(b, tuple)
                and len(b) == 2
                and b[0] == "x"
                and isinstance(b[1], int)
                and b[1] >= 1
            )
    if not ok:
        raise InvalidElement("not a basis element of %s: %r" % (alg, b))
    return b


def degree(alg, b):
    """Integer degree of a basis element under the algebra's grading."""
    fam = alg.family
    if fam in (WITT, WITT_POS, CARTAN_W1, VIRASORO):
        return 0 if b == Z else b[1]
    if fam == CARTAN_W:
        return sum(b[1]) - 1
    if fam == SPECIAL_S:
        return sum(b[1]) - 1 if b[0] == "sa" else sum(b[1]) - 2
    if fam == HAMILTONIAN_H:
        return sum(b[1]) - 2
    if fam == CONTACT_K:
        i = b[1]
        return sum(i[:-1]) + 2 * i[-1] - 2
    if fam == LOOP_SL2:
        root, p = b
        return 3 * p + {"E": 1, "F": -1, "H": 0}[root]
    # EXAMPLE_D
    return 1 if b == Y else b[1]


def order_key(alg, b):
    """Sort key realizing the algebra's total order on its basis.

    The first entry is the degree, so the order is grading-compatible,
    and keys of equal-degree elements differ in the tail.
    """
    fam = alg.family
    d = degree(alg, b)
    if fam == VIRASORO:
        return (d, 0 if b == Z else 1)
    if fam == CARTAN_W:
        return (d, b[2]) + tuple(reversed(b[1]))
    if fam == SPECIAL_S:
        if b[0] == "sa":
            return (d, 1) + tuple(reversed(b[1][1:]))
        return (d, b[2]) + tuple(reversed(b[1]))
    if fam in (HAMILTONIAN_H, CONTACT_K):
        return (d,) + tuple(reversed(b[1]))
    if fam == EXAMPLE_D:
        return (d, 1 if b == Y else 0)
    return (d,)


def compare_basis(alg, a, b):
    """-1, 0 or 1 according to the algebra's total basis order."""
    ka, kb = order_key(alg, a), order_key(alg, b)
    return (ka > kb) - (ka < kb)


def min_degree(alg):
    """Least degree of any basis element, or None if unbounded below."""
    fam = alg.family
    if fam in (WITT_POS, EXAMPLE_D):
        return 1
    if fam in (CARTAN_W1, CARTAN_W, SPECIAL_S, HAMILTONIAN_H):
        return -1
    if fam == CONTACT_K:
        return -2
    return None


# ---------------------------------------------------------------------------
# Lie element helpers


def lie_add(dst, src, c=Fraction(1)):
    """dst += c * src in place; dst keeps no zero values."""
    for b, v in src.items():
        nv = dst.get(b, Fraction(0)) + c * v
        if nv:
            dst[b] = nv
        else:
            dst.pop(b, None)
    return dst


def _one_term(b, c):
    c = Fraction(c)
    return {b: c} if c else {}


def _unit(n, k):
    """Multi-index 1_k (1-based k) of length n."""
    return tuple(1 if j == k - 1 else 0 for j in range(n))


def _sub_unit(i, k):
    """i - 1_k, or None if that leaves the lattice."""
    if i[k - 1] == 0:
        return None
    return i[: k - 1] + (i[k - 1] - 1,) + i[k:]


def _add(i, j):
    return tuple(a + b for a, b in zip(i, j))


def _w_bracket(n, i, k, j, m):
    """Structure constants of W_n on x^i d_k, x^j d_m."""
    out = {}
    c = j[k - 1]
    if c:
        u = _sub_unit(_add(i, j), k)
        lie_add(out, _one_term(("w", u, m), c))
    c = i[m - 1]
    if c:
        u = _sub_unit(_add(i, j), m)
        lie_add(out, _one_term(("w", u, k), -c))
    return out


def sb_expand(alg, i, k):
    """ShapeB element of S_n written in W_n coordinates."""
    n = alg.n
    out = {}
    if i[k - 1]:
        out[("w", _sub_unit(i, k), 1)] = Fraction(i[k - 1])
    if i[0]:
        lie_add(out, _one_term(("w", _sub_unit(i, 1), k), -i[0]))
    return out


def sn_expand(alg, b):
    """S_n basis element written in W_n coordinates."""
    if b[0] == "sa":
        return {("w", b[1], 1): Fraction(1)}
    return sb_expand(alg, b[1], b[2])


def sn_project(alg, v):
    """Rewrite a W_n Lie element in the S_n basis.

    Works greedily: every x^u d_k term with k >= 2 pins down a unique
    ShapeB contribution (via the inverse of d_1 on monomials); what is
    left must be ShapeA terms x^u d_1 with u_1 = 0.  Raises NotInSn if a
    residue remains, which happens exactly when the divergence is nonzero.
    """
    rem = dict(v)
    out = {}
    for b in sorted([b for b in rem if b[2] >= 2]):
        c = rem.get(b)
        if not c:
            continue
        _, u, k = b
        i = _add(u, _unit(alg.n, 1))
        coeff = -c / i[0]
        out[("sb", i, k)] = coeff
        lie_add(rem, sb_expand(alg, i, k), -coeff)
    for b, c in sorted(rem.items()):
        _, u, k = b
        if k != 1 or u[0] != 0:
            raise NotInSn("element is not in S_n: residue %r" % (b,))
        out[("sa", u)] = c
    return {b: c for b, c in out.items() if c}


def _h_bracket(alg, i, j):
    n = alg.n
    m = n // 2
    poly = {}
    for l in range(1, m + 1):
        c = i[m + l - 1] * j[l - 1] - i[l - 1] * j[m + l - 1]
        if c:
            u = _sub_unit(_sub_unit(_add(i, j), l), m + l)
            poly[u] = poly.get(u, 0) + c
    out = {}
    for u, c in poly.items():
        if c and any(u):
            out[("dh", u)] = Fraction(c)
    return out


def _k_bracket(alg, i, j):
    n = alg.n
    m = (n - 1) // 2
    poly = {}
    for l in range(1, m + 1):
        c = i[m + l - 1] * j[l - 1] - i[l - 1] * j[m + l - 1]
        if c:
            u = _sub_unit(_sub_unit(_add(i, j), l), m + l)
            poly[u] = poly.get(u, 0) + c
    c = i[-1] * sum(j[:-1]) - j[-1] * sum(i[:-1]) + 2 * (j[-1] - i[-1])
    if c:
        u = _sub_unit(_add(i, j), n)
        poly[u] = poly.get(u, 0) + c
    return {("dk", u): Fraction(c) for u, c in poly.items() if c}


_SL2 = {
    ("E", "F"): [("H", 1)],
    ("F", "E"): [("H", -1)],
    ("H", "E"): [("E", 2)],
    ("E", "H"): [("E", -2)],
    ("H", "F"): [("F", -2)],
    ("F", "H"): [("F", 2)],
}


def bracket_basis(alg, a, b):
    """Lie bracket [a, b] of two basis elements as a LieElement."""
    fam = alg.family
    if fam in (WITT, WITT_POS, CARTAN_W1):
        n, m = a[1], b[1]
        return _one_term(e(n + m), m - n)
    if fam == VIRASORO:
        if a == Z or b == Z:
            return {}
        n, m = a[1], b[1]
        out = _one_term(e(n + m), m - n)
        if n + m == 0:
            lie_add(out, _one_term(Z, Fraction(n**3 - n, 12)))
        return out
    if fam == CARTAN_W:
        return _w_bracket(alg.n, a[1], a[2], b[1], b[2])
    if fam == SPECIAL_S:
        amb = AlgebraSpec(CARTAN_W, alg.n)
        va, vb = sn_expand(alg, a), sn_expand(alg, b)
        return sn_project(alg, bracket_lie(amb, va, vb))
    if fam == HAMILTONIAN_H:
        return _h_bracket(alg, a[1], b[1])
    if fam == CONTACT_K:
        return _k_bracket(alg, a[1], b[1])
    if fam == LOOP_SL2:
        terms = _SL2.get((a[0], b[0]), [])
        return lie_add({}, {(r, a[1] + b[1]): Fraction(c) for r, c in terms})
    # EXAMPLE_D
    if a == Y and b != Y:
        return _one_term(x(b[1] + 1), 1)
    if b == Y and a != Y:
        return _one_term(x(a[1] + 1), -1)
    return {}


def bracket_lie(alg, u, v):
    """Bilinear extension of the bracket to Lie elements."""
    out = {}
    for a, ca in u.items():
        for b, cb in v.items():
            lie_add(out, bracket_basis(alg, a, b), ca * cb)
    return out


def lie_extreme(alg, v, sign):
    """Largest ("+") or smallest ("-") basis element of a Lie element."""
    pick = max if sign == "+" else min
    return pick(v, key=lambda b: order_key(alg, b))


def jacobi_residual(alg, a, b, c):
    """[[a,b],c] + [[b,c],a] + [[c,a],b]; zero iff Jacobi holds on a,b,c."""
    out = bracket_lie(alg, bracket_basis(alg, a, b), _one_term(c, 1))
    lie_add(out, bracket_lie(alg, bracket_basis(alg, b, c), _one_term(a, 1)))
    lie_add(out, bracket_lie(alg, bracket_basis(alg, c, a), _one_term(b, 1)))
    return out


# ---------------------------------------------------------------------------
# Component enumeration


def _compositions(total, n):
    """All length-n tuples of naturals summing to total, lexicographically."""
    if n == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, n - 1):
            yield (first,) + rest


def enumerate_component(alg, d):
    """All basis elements of degree d, sorted by the basis order."""
    fam = alg.family
    out = []
    if fam == WITT:
        out = [e(d)]
    elif fam == WITT_POS:
        out = [e(d)] if d >= 1 else []
    elif fam == CARTAN_W1:
        out = [e(d)] if d >= -1 else []
    elif fam == VIRASORO:
        out = [Z, e(0)] if d == 0 else [e(d)]
    elif fam == CARTAN_W:
        if d + 1 >= 0:
            out = [("w", i, k) for i in _compositions(d + 1, alg.n) for k in range(1, alg.n + 1)]
    elif fam == SPECIAL_S:
        if d + 1 >= 0:
            out += [("sa", (0,) + r) for r in _compositions(d + 1, alg.n - 1)]
        if d + 2 >= 1:
            out += [
                ("sb", i, k)
                for i in _compositions(d + 2, alg.n)
                if i[0] >= 1
                for k in range(2, alg.n + 1)
            ]
    elif fam == HAMILTONIAN_H:
        if d + 2 >= 1:
            out = [("dh", i) for i in _compositions(d + 2, alg.n)]
    elif fam == CONTACT_K:
        if d + 2 >= 0:
            for t in range(0, (d + 2) // 2 + 1):
                out += [
                    ("dk", i + (t,)) for i in _compositions(d + 2 - 2 * t, alg.n - 1)
                ]
    elif fam == LOOP_SL2:
        q, r = divmod(d, 3)
        out = [("H", q)] if r == 0 else [("E", q)] if r == 1 else [("F", q + 1)]
    else:  # EXAMPLE_D
        if d == 1:
            out = [x(1), Y]
        elif d >= 2:
            out = [x(d)]
    return sorted(out, key=lambda b: order_key(alg, b))


def elements_in_window(alg, lo, hi):
    """All basis elements with degree in [lo, hi], sorted."""
    out = []
    for d in range(lo, hi + 1):
        out += enumerate_component(alg, d)
    return out


# ---------------------------------------------------------------------------
# Canonical element names


def element_to_str(alg, b):
    """Canonical printed name of a basis element."""
    kind = b[0]
    if kind == "e":
        return "e[%d]" % b[1]
    if kind == "z":
        return "z"
    if kind == "w":
        return "x[%s]d[%d]" % (",".join(map(str, b[1])), b[2])
    if kind == "sa":
        return "SA[%s]" % ",".join(map(str, b[1]))
    if kind == "sb":
        return "SB[%s;%d]" % (",".join(map(str, b[1])), b[2])
    if kind == "dh":
        return "DH[%s]" % ",".join(map(str, b[1]))
    if kind == "dk":
        return "DK[%s]" % ",".join(map(str, b[1]))
    if kind in ("E", "F", "H"):
        return "%s[%d]" % (kind, b[1])
    if kind == "x":
        return "X[%d]" % b[1]
    return "Y"


_ALG_NAMES = {
    "witt": AlgebraSpec(WITT),
    "witt+": AlgebraSpec(WITT_POS),
    "w1": AlgebraSpec(CARTAN_W1),
    "virasoro": AlgebraSpec(VIRASORO),
    "loop-sl2": AlgebraSpec(LOOP_SL2),
    "example-d": AlgebraSpec(EXAMPLE_D),
}

_PARAM_NAMES = {
    "cartan-w": CARTAN_W,
    "special-s": SPECIAL_S,
    "hamiltonian": HAMILTONIAN_H,
    "contact": CONTACT_K,
}


def parse_algebra(name):
    """AlgebraSpec from its command-line name, e.g. "witt+" or "cartan-w:3"."""
    if name in _ALG_NAMES:
        return _ALG_NAMES[name]
    if ":" in name:
        head, _, tail = name.partition(":")
        if head in _PARAM_NAMES and tail.lstrip("-").isdigit():
            return AlgebraSpec(_PARAM_NAMES[head], int(tail))
    raise ValueError("unknown algebra name: %r" % (name,))


def algebra_to_str(alg):
    """Command-line name of an AlgebraSpec."""
    for name, spec in _ALG_NAMES.items():
        if spec == alg:
            return name
    for name, fam in _PARAM_NAMES.items():
        if alg.family == fam:
            return "%s:%d" % (name, alg.n)
    raise ValueError("unnamed algebra: %r" % (alg,))
