"""Finitely supported functions on the Bruhat-Tits tree of GL_2(Q_2) with
values in Sym^r, and the Hecke operator ``T = T+ + T-`` acting on them.

Vertices are the cosets of the representatives

    g0(n, lam) = [[2^n, lam], [0, 1]]        (radius n)
    g1(n, lam) = [[1, 0], [2 lam, 2^(n+1)]]  (radius -(n+1))

with ``0 <= lam < 2^n``.  The function ``[g, v]`` is the elementary function
supported on the vertex of ``g`` with value ``v``.

Two independent routes compute ``T``: :func:`hecke` applies the closed-form
vertex rules, and :func:`hecke_by_definition` multiplies coset
representatives by the three Hecke matrices and reduces the products back to
canonical representatives.  The self-tests compare them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator

from .errors import InsufficientPrecision, MismatchAtVertex, NonIntegral, NotInSubmodule
from .field2adic import ExtElement, ExtensionTower, truncate_rational, v2
from .gf2m import FFElement, FiniteField
from .rings import ZZ, is_zero
from .symmod import (
    GL2F2,
    W,
    Mat2,
    Quotient,
    SubmoduleSpec,
    SymPoly,
    act,
    in_vr1,
    member,
    quotient_image,
    strip_xr,
    subst,
)

# ---------------------------------------------------------------------------
# vertices


@dataclass(frozen=True, order=True)
class Vertex:
    side: int
    level: int
    label: int

    def __post_init__(self):
        if self.side not in (0, 1):
            raise ValueError("side must be 0 or 1")
        if self.level < 0 or not 0 <= self.label < (1 << self.level):
            raise ValueError(f"label {self.label} is not in I_{self.level}")

    @property
    def radius(self) -> int:
        return self.level if self.side == 0 else -(self.level + 1)

    def matrix(self) -> Mat2:
        if self.side == 0:
            return Mat2(1 << self.level, self.label, 0, 1)
        return Mat2(1, 0, 2 * self.label, 1 << (self.level + 1))

    def sort_key(self):
        return (self.radius, self.label)

    def __str__(self) -> str:
        return f"{self.side}/{self.level}/{self.label}"


CENTER = Vertex(0, 0, 0)


def g0(n: int, lam: int) -> Vertex:
    return Vertex(0, n, lam)


def g1(n: int, lam: int) -> Vertex:
    return Vertex(1, n, lam)


def truncate(lam: int, n: int) -> int:
    """Drop the top binary digit of a label in ``I_n``."""
    if n < 1 or not 0 <= lam < (1 << n):
        raise ValueError(f"{lam} is not a label in I_{n}")
    return lam % (1 << (n - 1))


# ---------------------------------------------------------------------------
# tree functions


class TreeFunction:
    """A finite map Vertex -> SymPoly, all values of one degree over one ring."""

    __slots__ = ("r", "ring", "entries")

    def __init__(self, r: int, ring, entries: dict[Vertex, SymPoly] | None = None):
        self.r = r
        self.ring = ring
        self.entries: dict[Vertex, SymPoly] = {}
        for v, p in (entries or {}).items():
            self._accumulate(v, p)

    @classmethod
    def elementary(cls, vertex: Vertex, value: SymPoly) -> "TreeFunction":
        return cls(value.r, value.ring, {vertex: value})

    @classmethod
    def zero(cls, r: int, ring) -> "TreeFunction":
        return cls(r, ring)

    def _accumulate(self, v: Vertex, p: SymPoly) -> None:
        if p.r != self.r or p.ring != self.ring:
            raise ValueError("value has the wrong degree or ring")
        cur = self.entries.get(v)
        new = p if cur is None else cur + p
        if new.is_zero():
            self.entries.pop(v, None)
        else:
            self.entries[v] = new

    def add_term(self, v: Vertex, p: SymPoly) -> None:
        self._accumulate(v, p)

    def copy(self) -> "TreeFunction":
        out = TreeFunction(self.r, self.ring)
        out.entries = dict(self.entries)
        return out

    def __add__(self, other: "TreeFunction") -> "TreeFunction":
        out = self.copy()
        for v, p in other.entries.items():
            out._accumulate(v, p)
        return out

    def __neg__(self) -> "TreeFunction":
        return TreeFunction(self.r, self.ring, {v: -p for v, p in self.entries.items()})

    def __sub__(self, other: "TreeFunction") -> "TreeFunction":
        return self + (-other)

    def scale(self, s) -> "TreeFunction":
        return TreeFunction(self.r, self.ring, {v: p.scale(s) for v, p in self.entries.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, TreeFunction):
            return NotImplemented
        return self.r == other.r and self.ring == other.ring and self.entries == other.entries

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[tuple[Vertex, SymPoly]]:
        return iter(sorted(self.entries.items(), key=lambda kv: kv[0].sort_key()))

    def support(self) -> list[Vertex]:
        return [v for v, _ in self]

    def radii(self) -> list[int]:
        return sorted({v.radius for v in self.entries})

    def at_radius(self, n: int) -> "TreeFunction":
        return TreeFunction(self.r, self.ring, {v: p for v, p in self.entries.items() if v.radius == n})

    def map_values(self, fn: Callable[[SymPoly], SymPoly], r: int, ring) -> "TreeFunction":
        out = TreeFunction(r, ring)
        for v, p in self.entries.items():
            out._accumulate(v, fn(p))
        return out

    def dump(self) -> str:
        """One line per vertex, ``side/level/label: polynomial``, by radius then label."""
        return "\n".join(f"{v}: {p}" for v, p in self)

    def __repr__(self) -> str:
        body = "; ".join(f"[{v}, {p}]" for v, p in self)
        return f"TreeFunction(r={self.r}, {body or '0'})"


# ---------------------------------------------------------------------------
# the Hecke operator by vertex rules

_X_2Y = ((1, 0), (0, 2))        # P(X, 2Y)
_X_2YmX = ((1, 0), (-1, 2))     # P(X, 2Y - X)
_2X_Y = ((2, 0), (0, 1))        # P(2X, Y)
_2X_XpY = ((2, 0), (1, 1))      # P(2X, X + Y)
_2XmY_Y = ((2, -1), (0, 1))     # P(2X - Y, Y)
_XpY_2Y = ((1, 1), (0, 2))      # P(X + Y, 2Y)


def _plus_terms(v: Vertex, p: SymPoly) -> list[tuple[Vertex, SymPoly]]:
    n, lam = v.level, v.label
    if v.side == 0:
        return [
            (g0(n + 1, lam), subst(p, *_X_2Y)),
            (g0(n + 1, lam + (1 << n)), subst(p, *_X_2YmX)),
        ]
    return [
        (g1(n + 1, lam), subst(p, *_2X_Y)),
        (g1(n + 1, lam + (1 << n)), subst(p, *_2XmY_Y)),
    ]


def _minus_terms(v: Vertex, p: SymPoly) -> list[tuple[Vertex, SymPoly]]:
    n, lam = v.level, v.label
    if n == 0:
        if v.side == 0:
            return [(g1(0, 0), subst(p, *_2X_Y))]
        return [(g0(0, 0), subst(p, *_X_2Y))]
    half = 1 << (n - 1)
    low = lam < half
    target = lam if low else lam - half
    if v.side == 0:
        return [(g0(n - 1, target), subst(p, *(_2X_Y if low else _2X_XpY)))]
    return [(g1(n - 1, target), subst(p, *(_X_2Y if low else _XpY_2Y)))]


def _apply(f: TreeFunction, rule) -> TreeFunction:
    out = TreeFunction(f.r, f.ring)
    for v, p in f.entries.items():
        for w, q in rule(v, p):
            out._accumulate(w, q)
    return out


def hecke_plus(f: TreeFunction) -> TreeFunction:
    return _apply(f, _plus_terms)


def hecke_minus(f: TreeFunction) -> TreeFunction:
    return _apply(f, _minus_terms)


def hecke(f: TreeFunction) -> TreeFunction:
    return _apply(f, lambda v, p: _plus_terms(v, p) + _minus_terms(v, p))


def hecke_poly(f: TreeFunction, coeffs: Iterable) -> TreeFunction:
    """``sum_i coeffs[i] T^i`` applied to ``f`` (coefficients are ring scalars)."""
    out = TreeFunction(f.r, f.ring)
    power = f
    for i, c in enumerate(coeffs):
        if i:
            power = hecke(power)
        if not is_zero(c):
            out = out + power.scale(c)
    return out


# ---------------------------------------------------------------------------
# coset reduction and the Hecke operator by definition


def _as_fraction(x) -> Fraction:
    return Fraction(x)


def _v(x) -> float:
    x = Fraction(x)
    return v2(x)


def _mod_pow2(x: Fraction, n: int) -> int:
    """The label in ``[0, 2^n)`` congruent to a 2-integral rational."""
    if n == 0:
        return 0
    return int(truncate_rational(x, n))


def coset_reduce(m: Mat2) -> tuple[Vertex, Mat2]:
    """Write ``m = g * k * 2^s`` with ``g`` a vertex representative and ``k`` in GL_2(Z_2).

    Returns the vertex and ``k``.
    """
    a, b, c, d = (Fraction(x) for x in (m.a, m.b, m.c, m.d))
    if a * d - b * c == 0:
        raise ValueError("singular matrix")
    # right half: column-reduce to upper triangular [[x, y], [0, z]]
    if _v(d) <= _v(c):
        x, y, z = a - b * c / d, b, d
    else:
        x, y, z = b - a * d / c, a, c
    xs, ys = x / z, y / z
    n = _v(xs)
    if n >= 0 and _v(ys) >= 0:
        vert = g0(int(n), _mod_pow2(ys, int(n)))
    else:
        # left half: column-reduce to lower triangular [[x, 0], [y, z]]
        if _v(a) <= _v(b):
            x, y, z = a, c, d - c * b / a
        else:
            x, y, z = b, d, c - d * a / b
        ys, zs = y / x, z / x
        m1 = _v(zs)
        if not (m1 >= 1 and _v(ys) >= 1):
            raise AssertionError(f"coset reduction failed for {m}")
        level = int(m1) - 1
        vert = g1(level, _mod_pow2(ys / 2, level))
    k = vert.matrix().inverse() @ Mat2(a, b, c, d)
    s = min(_v(e) for e in (k.a, k.b, k.c, k.d))
    k = k.scaled(Fraction(2) ** (-int(s))).normalized()
    if _v(k.det()) != 0:
        raise AssertionError(f"coset reduction produced a non-unit determinant for {m}")
    return vert, k


def left_translate(h: Mat2, f: TreeFunction) -> TreeFunction:
    """``h . f`` where ``h . [g, v] = [h g, v]``."""
    out = TreeFunction(f.r, f.ring)
    for v, p in f.entries.items():
        vert, k = coset_reduce(h @ v.matrix())
        out._accumulate(vert, act(k, p))
    return out


_HECKE_MATS = (
    (Mat2(2, 0, 0, 1), _X_2Y),
    (Mat2(2, 1, 0, 1), _X_2YmX),
    (Mat2(1, 0, 0, 2), _2X_Y),
)


def hecke_by_definition(f: TreeFunction) -> TreeFunction:
    """``T[g, v] = sum_mu [g (2 mu; 0 1), v(X, 2Y - mu X)] + [g (1 0; 0 2), v(2X, Y)]``."""
    out = TreeFunction(f.r, f.ring)
    for v, p in f.entries.items():
        g = v.matrix()
        for mat, sub in _HECKE_MATS:
            vert, k = coset_reduce(g @ mat)
            out._accumulate(vert, act(k, subst(p, *sub)))
    return out


# ---------------------------------------------------------------------------
# identities behind the vertex rules


def coset_identities(n_max: int = 6) -> list[str]:
    """Check the matrix identities used to derive the vertex rules.

    Returns a list of failure descriptions (empty when all hold).
    """
    fails = []
    up = Mat2(1, 1, 0, 1)
    up_inv = Mat2(1, -1, 0, 1)

    def check(name, lhs, rhs):
        if lhs.normalized() != rhs.normalized():
            fails.append(f"{name}: {lhs} != {rhs}")

    M = lambda v: v.matrix()  # noqa: E731
    check("g0_00 g1_00 = g1_00", M(g0(0, 0)) @ M(g1(0, 0)), M(g1(0, 0)))
    check("g1_00 g0_10 = 2 g0_00", M(g1(0, 0)) @ M(g0(1, 0)), M(g0(0, 0)).scaled(2))
    for n in range(n_max + 1):
        for lam in range(1 << n):
            A0, A1 = M(g0(n, lam)), M(g1(n, lam))
            check(f"g0_{n},{lam} g0_1,0", A0 @ M(g0(1, 0)), M(g0(n + 1, lam)))
            check(f"g0_{n},{lam} g0_1,1", A0 @ M(g0(1, 1)), M(g0(n + 1, lam + (1 << n))))
            check(f"g1_{n},{lam} g1_0,0", A1 @ M(g1(0, 0)), M(g1(n + 1, lam)))
            # matrix relations for the transfer between halves
            s = Mat2(0, 1, 1, lam)
            s2 = Mat2(0, 1, 1, lam - (1 << n))
            check(f"(0 1;1 {lam}) g0_{n + 2},{lam}", s @ M(g0(n + 2, lam)), M(g1(n + 1, lam)) @ W)
            check(f"(0 1;1 {lam}) g0_{n + 2},{lam}+2^{n + 1}", s @ M(g0(n + 2, lam + (1 << (n + 1)))),
                  M(g1(n + 1, lam + (1 << n))) @ W)
            check(f"(0 1;1 {lam}-2^{n}) g0_{n + 2},{lam}+2^{n}", s2 @ M(g0(n + 2, lam + (1 << n))),
                  M(g1(n + 1, lam)) @ W)
            check(f"(0 1;1 {lam}-2^{n}) g0_{n + 2},{lam}+3*2^{n}",
                  s2 @ M(g0(n + 2, lam + (1 << n) + (1 << (n + 1)))),
                  M(g1(n + 1, lam + (1 << n))) @ W)
            if n >= 1:
                t = truncate(lam, n)
                low = lam < (1 << (n - 1))
                rhs0 = M(g0(n - 1, t)).scaled(2) if low else M(g0(n - 1, t)).scaled(2) @ up
                check(f"g0_{n},{lam} g1_0,0", A0 @ M(g1(0, 0)), rhs0)
                rhs1 = M(g1(n - 1, t)).scaled(2) if low else M(g1(n - 1, t)).scaled(2) @ Mat2(1, 0, 1, 1)
                check(f"g1_{n},{lam} g0_1,0", A1 @ M(g0(1, 0)), rhs1)
                rel = M(g1(n - 1, t)) @ W if low else M(g1(n - 1, t)) @ W @ up
                check(f"(0 1;1 {lam}) g0_{n},{lam}", s @ M(g0(n, lam)), rel)
                s3 = Mat2(0, 1, 1, lam - (1 << n))
                rel3 = M(g1(n - 1, t)) @ W @ up_inv if low else M(g1(n - 1, t)) @ W
                check(f"(0 1;1 {lam}-2^{n}) g0_{n},{lam}", s3 @ M(g0(n, lam)), rel3)
    return fails


def transfer_check(n: int, lam: int, p: SymPoly) -> dict:
    """Check the four identities that move a Hecke computation from the left
    half of the tree to the right half, for ``[g1(n, lam), w.P]``.
    """
    wp = act(W, p)
    left = TreeFunction.elementary(g1(n, lam), wp)
    s_a = Mat2(0, 1, 1, lam)
    s_b = Mat2(0, 1, 1, lam - (1 << n))
    right_a = TreeFunction.elementary(g0(n + 1, lam), p)
    right_b = TreeFunction.elementary(g0(n + 1, lam + (1 << n)), p)
    results = {
        "plus_a": hecke_plus(left) == left_translate(s_a, hecke_plus(right_a)),
        "plus_b": hecke_plus(left) == left_translate(s_b, hecke_plus(right_b)),
        "minus_a": hecke_minus(left) == left_translate(s_a, hecke_minus(right_a)),
        "minus_b": hecke_minus(left) == left_translate(s_b, hecke_minus(right_b)),
    }
    return {"n": n, "label": lam, "r": p.r, "holds": all(results.values()), **results}


# ---------------------------------------------------------------------------
# reduction modulo the maximal ideal and quotient post-processing


def reduce_poly_mod_wp(p: SymPoly, vertex: Vertex | None = None) -> SymPoly:
    tower = p.ring
    if not isinstance(tower, ExtensionTower):
        raise TypeError("reduction mod the maximal ideal needs 2-adic coefficients")
    out = []
    for j, c in enumerate(p.coeffs):
        low = c.lower_valuation()
        if low < 0:
            try:
                val = c.valuation()
            except InsufficientPrecision:
                val = low
            if val < 0:
                raise NonIntegral(
                    f"coefficient of X^{p.r - j}Y^{j} at {vertex} has valuation {val}",
                    vertex=vertex,
                    monomial=(p.r - j, j),
                )
        out.append(c.residue())
    return SymPoly(p.r, tuple(out), tower.residue_field)


def reduce_mod_wp(f: TreeFunction) -> TreeFunction:
    """Coefficientwise residues; raises NonIntegral at the first bad coefficient."""
    field = f.ring.residue_field
    out = TreeFunction(f.r, field)
    for v, p in f:
        out._accumulate(v, reduce_poly_mod_wp(p, v))
    return out


def nonintegral_entries(f: TreeFunction) -> list[dict]:
    """Every coefficient of negative valuation, for reporting."""
    bad = []
    for v, p in f:
        for j, c in enumerate(p.coeffs):
            if c.lower_valuation() < 0:
                try:
                    val = c.valuation()
                except InsufficientPrecision:
                    continue
                if val < 0:
                    bad.append({"vertex": str(v), "monomial": f"X^{p.r - j}Y^{j}", "valuation": str(val)})
    return bad


ROUTES = {
    # name: (strip X_r first, submodule that must contain the stripped value, quotient)
    "VrModVr1_to_V0": (False, None, Quotient.VrModVr1_to_V0),
    "ThetaQuot_to_V1": (True, SubmoduleSpec.Vr1, Quotient.ThetaQuot_to_V1),
    "ThetaQuot_to_V0": (True, SubmoduleSpec.Vr1, Quotient.ThetaQuot_to_V0),
}


def postprocess(f: TreeFunction, quotient: Quotient | str, strip: bool | None = None) -> TreeFunction:
    """Apply a quotient map entrywise.

    For the theta quotients the ``X^r`` and ``Y^r`` terms are removed first
    (they lie in ``X_r``) and the remainder must lie in ``V_r^(1)``.
    """
    quotient = Quotient(quotient)
    do_strip, need, _ = ROUTES[quotient.value]
    if strip is not None:
        do_strip = strip
    out_r = 1 if quotient is Quotient.ThetaQuot_to_V1 else 0
    out = TreeFunction(out_r, f.ring)
    for v, p in f:
        q = strip_xr(p) if do_strip else p
        if need is not None and not member(q, need):
            raise NotInSubmodule(f"value at {v} is not in {need.value}", vertex=v)
        out._accumulate(v, quotient_image(q, quotient))
    return out


def congruent_mod_wp(f: TreeFunction, g: TreeFunction) -> bool:
    """``f - g`` has integral coefficients that all vanish modulo the maximal ideal."""
    try:
        return len(reduce_mod_wp(f - g)) == 0
    except NonIntegral:
        return False


# ---------------------------------------------------------------------------
# random inputs for self-tests


def random_vertex(rng: random.Random, max_level: int = 6) -> Vertex:
    side = rng.randrange(2)
    level = rng.randrange(max_level + 1)
    return Vertex(side, level, rng.randrange(1 << level))


def random_int_poly(rng: random.Random, r: int, bound: int = 20) -> SymPoly:
    return SymPoly(r, tuple(rng.randint(-bound, bound) for _ in range(r + 1)), ZZ)


def random_tree_function(rng: random.Random, r: int, size: int = 4, max_level: int = 6) -> TreeFunction:
    f = TreeFunction(r, ZZ)
    for _ in range(size):
        f.add_term(random_vertex(rng, max_level), random_int_poly(rng, r))
    return f


def selftest(seed: int = 0, n_max: int = 6, payloads: int = 100, functions: int = 1000) -> dict:
    """Run the tree self-test suite and return a summary."""
    rng = random.Random(seed)
    report = {"coset_identities": [], "transfer": 0, "transfer_failures": [],
              "rule_vs_definition_failures": 0, "geometry_failures": 0, "additivity_failures": 0}
    report["coset_identities"] = coset_identities(n_max)
    for i in range(payloads):
        r = rng.randint(0, 8)
        p = random_int_poly(rng, r)
        n = rng.randint(0, n_max)
        lam = rng.randrange(1 << n)
        rep = transfer_check(n, lam, p)
        report["transfer"] += 1
        if not rep["holds"]:
            report["transfer_failures"].append(rep)
        f = TreeFunction.elementary(random_vertex(rng, n_max), p)
        if hecke(f) != hecke_by_definition(f):
            report["rule_vs_definition_failures"] += 1
    for _ in range(functions):
        r = rng.randint(0, 8)
        f = random_tree_function(rng, r, size=rng.randint(1, 4))
        g = random_tree_function(rng, r, size=rng.randint(1, 4))
        if hecke(f + g) != hecke(f) + hecke(g):
            report["additivity_failures"] += 1
        if not support_geometry_ok(f):
            report["geometry_failures"] += 1
    report["ok"] = (not report["coset_identities"] and not report["transfer_failures"]
                    and report["rule_vs_definition_failures"] == 0
                    and report["geometry_failures"] == 0 and report["additivity_failures"] == 0)
    return report


def support_geometry_ok(f: TreeFunction) -> bool:
    """``T+`` moves every vertex one step out and ``T-`` one step in."""
    for v, p in f.entries.items():
        for w, _ in _plus_terms(v, p):
            if abs(w.radius) != abs(v.radius) + 1 and not (v.radius == 0 and w.radius == 1):
                return False
            if (w.radius >= 0) != (v.radius >= 0):
                return False
        for w, _ in _minus_terms(v, p):
            if v.radius == 0:
                if w.radius != -1:
                    return False
            elif v.radius == -1:
                if w.radius != 0:
                    return False
            elif abs(w.radius) != abs(v.radius) - 1:
                return False
    return True
