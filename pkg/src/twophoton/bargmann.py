"""Differential-operator calculus on the Fock-Bargmann space.

Operators are sums alpha^j d^l with truncated-series-in-z coefficients, kept
in canonical form (all derivatives to the right). The deformed one-boson
realization is assembled from series exponentials and square roots of the
multiplication operator alpha^2; the apparent 1/alpha factors of the closed
forms must cancel order by order, and the construction asserts that instead
of assuming it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .algebra import two_photon_algebra
from .report import CheckResult
from .scalars import ComplexRational
from .series import TruncatedSeries

__all__ = [
    "DiffOperator", "EigenProblem", "SingularRecurrenceError",
    "classical_rep", "first_order_rep", "deformed_rep",
    "verify_rep", "rep_checks", "eigen_operator", "series_solve",
    "GENERATOR_ORDER",
]

# generator order used for eigenproblem coefficients beta1..beta5
GENERATOR_ORDER = ("N", "B-", "B+", "A-", "A+")


def _falling(n, l):
    out = 1
    for i in range(l):
        out *= n - i
    return out


class DiffOperator:
    """Canonical operator sum_{j,l} c_{jl}(z) alpha^j d^l."""

    __slots__ = ("order", "terms")

    def __init__(self, order, terms):
        self.order = order
        clean = {}
        for (j, l), s in terms.items():
            if j < 0 or l < 0:
                raise ValueError(f"negative power in term ({j}, {l})")
            if s.order != order:
                raise ValueError(f"order mismatch: {s.order} vs {order}")
            if not s.is_zero():
                clean[(j, l)] = s
        self.terms = clean

    @classmethod
    def zero(cls, order):
        return cls(order, {})

    @classmethod
    def identity(cls, order):
        return cls(order, {(0, 0): TruncatedSeries.one(order)})

    @classmethod
    def from_scalar_terms(cls, order, terms):
        return cls(order, {
            key: (c if isinstance(c, TruncatedSeries)
                  else TruncatedSeries.one(order) * c)
            for key, c in terms.items()})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        self._require_same(other)
        acc = dict(self.terms)
        for key, s in other.terms.items():
            cur = acc.get(key)
            acc[key] = s if cur is None else cur + s
        return DiffOperator(self.order, acc)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return DiffOperator(self.order, {k: -s for k, s in self.terms.items()})

    def scale(self, c):
        return DiffOperator(self.order, {k: s * c for k, s in self.terms.items()})

    def __mul__(self, other):
        """Composition; d^l alpha^m reorders through [d, alpha] = 1."""
        if not isinstance(other, DiffOperator):
            return self.scale(other)
        self._require_same(other)
        acc = {}
        for (j1, l1), s1 in self.terms.items():
            for (j2, l2), s2 in other.terms.items():
                s = s1 * s2
                if s.is_zero():
                    continue
                for t in range(min(l1, j2) + 1):
                    c = comb(l1, t) * comb(j2, t) * factorial(t)
                    key = (j1 + j2 - t, l1 + l2 - t)
                    add = s * Fraction(c)
                    cur = acc.get(key)
                    acc[key] = add if cur is None else cur + add
        return DiffOperator(self.order, acc)

    def __rmul__(self, other):
        return self.scale(other)

    def commutator(self, other):
        return self * other - other * self

    def _require_same(self, other):
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def truncate(self, order):
        return DiffOperator(order, {k: s.truncate(order) for k, s in self.terms.items()})

    def substitute_z(self, z):
        """Collapse the series coefficients at an exact rational z value."""
        z = Fraction(z)
        out = {}
        for key, s in self.terms.items():
            val = sum((c * z ** i for i, c in enumerate(s.coeffs)), Fraction(0))
            if val != 0:
                out[key] = TruncatedSeries((val,), 0)
        return DiffOperator(0, out)

    def apply_to_polynomial(self, coeffs):
        """Apply to sum_n c_n alpha^n; returns the image degree -> coefficient map."""
        out = {}
        for (j, l), s in self.terms.items():
            for n, c in coeffs.items():
                f = _falling(n, l)
                if f == 0 or c == 0:
                    continue
                m = n + j - l
                add = s * (c * f)
                cur = out.get(m)
                out[m] = add if cur is None else cur + add
        return {m: s for m, s in out.items() if not s.is_zero()}

    def __eq__(self, other):
        if not isinstance(other, DiffOperator):
            return NotImplemented
        return self.order == other.order and self.terms == other.terms

    def __hash__(self):
        return hash((self.order, frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (j, l) in sorted(self.terms, key=lambda k: (k[1], k[0])):
            s = self.terms[(j, l)]
            names = []
            if j:
                names.append("a" if j == 1 else f"a^{j}")
            if l:
                names.append("d" if l == 1 else f"d^{l}")
            body = "*".join(names)
            parts.append(f"({s})" + (f"*{body}" if body else ""))
        return " + ".join(parts)

    def __repr__(self):
        return f"<DiffOperator {self}>"


# -- commutative alpha-polynomial scratch ring ----------------------------------
#
# during construction the closed forms pass through Laurent terms in alpha;
# a CPoly is a {alpha_power: series} map with possibly negative powers.


def _cp_scale(p, c):
    return {j: s * c for j, s in p.items()}


def _cp_add(p, q):
    acc = dict(p)
    for j, s in q.items():
        cur = acc.get(j)
        acc[j] = s if cur is None else cur + s
    return {j: s for j, s in acc.items() if not s.is_zero()}


def _cp_mul(p, q):
    acc = {}
    for j1, s1 in p.items():
        for j2, s2 in q.items():
            s = s1 * s2
            if s.is_zero():
                continue
            cur = acc.get(j1 + j2)
            acc[j1 + j2] = s if cur is None else cur + s
    return {j: s for j, s in acc.items() if not s.is_zero()}


def _cp_exp(p, order):
    """exp of a z-positive polynomial; nilpotent mod z^(order+1)."""
    for s in p.values():
        low = s.low_order()
        if low is not None and low == 0:
            raise ValueError("cpoly exp needs strictly positive z order")
    acc = {0: TruncatedSeries.one(order)}
    power = {0: TruncatedSeries.one(order)}
    for n in range(1, order + 1):
        power = _cp_mul(power, p)
        if not power:
            break
        acc = _cp_add(acc, _cp_scale(power, Fraction(1, factorial(n))))
    return acc


def _cp_sqrt_unit(p, order):
    """sqrt of 1 + Q with Q strictly z-positive, via the binomial series."""
    q = _cp_add(p, {0: -TruncatedSeries.one(order)})
    for s in q.values():
        low = s.low_order()
        if low is not None and low == 0:
            raise ValueError("cpoly sqrt needs constant part exactly 1")
    acc = {0: TruncatedSeries.one(order)}
    power = {0: TruncatedSeries.one(order)}
    binom = Fraction(1)
    for n in range(1, order + 1):
        power = _cp_mul(power, q)
        if not power:
            break
        binom = binom * (Fraction(1, 2) - (n - 1)) / n
        acc = _cp_add(acc, _cp_scale(power, binom))
    return acc


def _cp_divz(p):
    return {j: s.divided_by_z() for j, s in p.items()}


def _cp_shift(p, m):
    return {j + m: s for j, s in p.items()}


def _cp_truncate(p, order):
    out = {}
    for j, s in p.items():
        t = s.truncate(order)
        if not t.is_zero():
            out[j] = t
    return out


def _finish(mult_parts, order, name):
    """Assemble {d_power: cpoly} into a DiffOperator, rejecting Laurent leftovers."""
    terms = {}
    for l, p in mult_parts.items():
        for j, s in _cp_truncate(p, order).items():
            if j < 0:
                raise RuntimeError(
                    f"negative alpha power alpha^{j} survived in the deformed {name}")
            terms[(j, l)] = s
    return DiffOperator(order, terms)


# -- representations -------------------------------------------------------------

_CLASSICAL = {
    "N": (1, 1), "A+": (1, 0), "A-": (0, 1),
    "M": (0, 0), "B+": (2, 0), "B-": (0, 2),
}


def classical_rep(gen, order=0):
    """Undeformed one-boson table: N = a d, A+ = a, A- = d, M = 1, B+ = a^2, B- = d^2."""
    try:
        key = _CLASSICAL[gen]
    except KeyError:
        raise KeyError(f"unknown generator {gen!r}") from None
    return DiffOperator(order, {key: TruncatedSeries.one(order)})


def first_order_rep(gen, order=1):
    """The displayed first-order table, zero above z^1."""
    if order < 1:
        raise ValueError("first-order table needs order >= 1")

    def s(c0=0, c1=0):
        return TruncatedSeries([Fraction(c0), Fraction(c1)] + [Fraction(0)] * (order - 1),
                               order)

    tables = {
        "B+": {(2, 0): s(1)},
        "M": {(0, 0): s(1)},
        "N": {(1, 1): s(1), (3, 1): s(0, 1)},
        "A+": {(1, 0): s(1), (3, 0): s(0, Fraction(-1, 2))},
        "A-": {(0, 1): s(1), (2, 1): s(0, Fraction(3, 2))},
        "B-": {(0, 2): s(1), (2, 2): s(0, 1), (1, 1): s(0, 1)},
    }
    try:
        return DiffOperator(order, tables[gen])
    except KeyError:
        raise KeyError(f"unknown generator {gen!r}") from None


def deformed_rep(gen, order):
    """Deformed one-boson realization, exact mod z^(order+1).

    Built from the closed forms: one internal division by z costs one order,
    so everything is computed at order+1 and truncated at the end.
    """
    if gen not in _CLASSICAL:
        raise KeyError(f"unknown generator {gen!r}")
    k = order
    kk = k + 1  # internal margin for the single /z in each closed form
    one = TruncatedSeries.one(kk)
    # u = 2 z alpha^2 as a cpoly
    u2 = {2: TruncatedSeries.z_power(1, kk, 2)}

    if gen == "B+":
        return DiffOperator(k, {(2, 0): TruncatedSeries.one(k)})
    if gen == "M":
        return DiffOperator(k, {(0, 0): TruncatedSeries.one(k)})

    minus_one = {0: -one}
    exp_u = _cp_truncate(_cp_exp(u2, kk), k)      # e^{2 z alpha^2}, back at order k
    # (e^{2 z a^2} - 1)/(2z), exactly order k after the division
    growth = _cp_scale(_cp_divz(_cp_add(_cp_exp(u2, kk), minus_one)), Fraction(1, 2))

    if gen == "N":
        # (e^{2 z a^2} - 1)/(2z) * a^{-1} d
        return _finish({1: _cp_shift(growth, -1)}, k, "N")

    if gen in ("A+", "A-"):
        # shared radical ((1 - e^{-2 z a^2})/(2z))^{1/2} = a * sqrt(unit)
        exp_mu = _cp_exp(_cp_scale(u2, -1), kk)
        radicand = _cp_scale(
            _cp_divz(_cp_add({0: one}, _cp_scale(exp_mu, -1))), Fraction(1, 2))
        root = _cp_sqrt_unit(_cp_shift(radicand, -2), k)
        if gen == "A+":
            return _finish({0: _cp_shift(root, 1)}, k, "A+")
        # e^{2 z a^2} a^{-1} * (a * root) d = e^{2 z a^2} root d
        return _finish({1: _cp_mul(exp_u, root)}, k, "A-")

    # B-: ((e^{2 z a^2}-1)/(2 z a^2)) d^2 + (e^{2 z a^2}/a + (1-e^{2 z a^2})/(2 z a^3)) d
    dd = _cp_shift(growth, -2)
    d1 = _cp_add(_cp_shift(exp_u, -1), _cp_shift(_cp_scale(growth, -1), -3))
    return _finish({2: dd, 1: d1}, k, "B-")


def verify_rep(order):
    """Every deformed commutator matches the image of the tabulated bracket."""
    alg = two_photon_algebra(order)
    images = {g: deformed_rep(g, order) for g in alg.generators}

    def image_of(elem):
        out = DiffOperator.zero(order)
        for word, s in elem.terms.items():
            op = DiffOperator.identity(order)
            for g in word:
                op = op * images[alg.generators[g]]
            out = out + op.scale(s)
        return out

    entries = []
    for i, x in enumerate(alg.generators):
        for y in alg.generators[:i]:
            lhs = images[x].commutator(images[y])
            rhs = image_of(alg.relation(x, y))
            residual = lhs - rhs
            entries.append(CheckResult(
                name=f"rep/bracket/{x},{y}", passed=residual.is_zero(),
                residual=str(residual), params={"order": str(order)}))
    return entries


def rep_checks(order):
    """Bracket residuals plus the classical-limit and first-order table ties."""
    entries = list(verify_rep(order))
    gens = _CLASSICAL.keys()
    bad = [g for g in gens if deformed_rep(g, 0) != classical_rep(g, 0)]
    entries.append(CheckResult(
        name="rep/classical-limit", passed=not bad,
        residual="0" if not bad else ", ".join(bad), params={"order": "0"}))
    if order >= 1:
        bad = [g for g in gens
               if deformed_rep(g, order).truncate(1) != first_order_rep(g, 1)]
        entries.append(CheckResult(
            name="rep/first-order-table", passed=not bad,
            residual="0" if not bad else ", ".join(bad), params={"order": str(order)}))
    return entries


# -- eigenproblem ----------------------------------------------------------------


@dataclass(frozen=True)
class EigenProblem:
    """Exact coefficients of beta1 N + beta2 B- + beta3 B+ + beta4 A- + beta5 A+."""

    betas: tuple
    eigenvalue: ComplexRational

    def __post_init__(self):
        if len(self.betas) != 5:
            raise ValueError("need exactly five beta coefficients")
        if all(not b for b in self.betas):
            raise ValueError("at least one beta must be nonzero")


def eigen_operator(problem, order, mode="full"):
    """sum_i beta_i rep(generator_i) - eigenvalue, in canonical form."""
    reps = {
        "classical": lambda g: classical_rep(g, order),
        "first-order": lambda g: first_order_rep(g, max(order, 1)).truncate(order)
        if order >= 1 else None,
        "full": lambda g: deformed_rep(g, order),
    }
    if mode not in reps:
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "first-order" and order < 1:
        raise ValueError("first-order mode needs order >= 1")
    op = DiffOperator.zero(order)
    for beta, gen in zip(problem.betas, GENERATOR_ORDER):
        if not beta:
            continue
        op = op + reps[mode](gen).scale(beta)
    ident = DiffOperator.identity(order)
    return op - ident.scale(problem.eigenvalue)


class SingularRecurrenceError(ValueError):
    """The recurrence head vanished against a nonzero right-hand side."""

    def __init__(self, index):
        self.index = index
        super().__init__(f"singular recurrence head at coefficient index {index}")


def series_solve(op, degree, seeds=None):
    """Power-series kernel element of a z-evaluated operator.

    The operator must have order 0 (exact scalars). Coefficients follow the
    triangular recurrence in which c_n is determined by the alpha^(n-d)
    equation, d being the largest derivative excess. Indices below d are free
    seeds (defaults c0 = 1, then c1 = 0). A vanishing head with vanishing
    right-hand side is a free direction: the seed value is used if supplied,
    otherwise 1 on an all-zero prefix and 0 after a nonzero one. A vanishing
    head against a nonzero right-hand side raises SingularRecurrenceError.

    Returns (coefficients, residual_tail) where the tail holds the nonzero
    image coefficients above degree + min(j - l).
    """
    if op.order != 0:
        raise ValueError("series_solve needs an order-0 operator; substitute z first")
    if op.is_zero():
        raise ValueError("degenerate zero operator")
    terms = {key: s.coeffs[0] for key, s in op.terms.items()}
    smin = min(j - l for (j, l) in terms)
    d = max(0, -smin)

    seeds = dict(seeds or {})
    defaults = {0: Fraction(1), 1: Fraction(0)}
    for n in range(d):
        seeds.setdefault(n, defaults.get(n, Fraction(0)))

    coeffs = {}
    for n in range(min(d, degree + 1)):
        coeffs[n] = seeds[n]

    for n in range(d, degree + 1):
        m = n - d
        head = Fraction(0)
        rhs = Fraction(0)
        for (j, l), c in terms.items():
            s = j - l
            if s == smin:
                head = head + c * _falling(n, l)
            else:
                np = m - s
                if 0 <= np < n:
                    prev = coeffs.get(np, Fraction(0))
                    if prev:
                        rhs = rhs + c * _falling(np, l) * prev
        if head == 0:
            if rhs != 0:
                raise SingularRecurrenceError(n)
            if n in seeds:
                coeffs[n] = seeds[n]
            else:
                coeffs[n] = Fraction(1) if all(v == 0 for v in coeffs.values()) else Fraction(0)
        else:
            coeffs[n] = -rhs / head

    image = op.apply_to_polynomial(coeffs)
    solved_through = degree + smin
    tail = {}
    for m, s in image.items():
        val = s.coeffs[0]
        if val == 0:
            continue
        if m <= solved_through:
            raise AssertionError(f"recurrence left residual at degree {m}")
        tail[m] = val
    return [coeffs.get(n, Fraction(0)) for n in range(degree + 1)], tail
