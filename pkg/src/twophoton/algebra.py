"""PBW normal-ordering engine for the deformed generator algebras.

Elements are finite sums of PBW-ordered words (tuples of generator indices,
non-decreasing) with truncated-series coefficients. A product rewrites every
out-of-order adjacent pair through the relation table, X*Y -> Y*X + [X,Y].
The generator orders of the built-in algebras are chosen so that every
relation term either strictly shortens the word or carries a strictly
positive z power; series truncation then prunes the exponential tails and
rewriting terminates. A fuel counter turns a broken relation table into a
visible error instead of a hang.

Two algebras are built in:

* ``two_photon_algebra(order)``: generators B+ < N < M < A+ < A- < B-,
  with the z-deformed commutators, coproducts and antipodes of the
  two-photon algebra h6.
* ``schrodinger_algebra(order)``: generators H < D < M < P < K < C, the
  isomorphic deformed Schrodinger algebra in (1+1) dimensions.
"""

from __future__ import annotations

import sys
from fractions import Fraction
from math import factorial

from .series import TruncatedSeries

__all__ = [
    "NormalOrderError",
    "NCElement",
    "TensorElement",
    "QuantumAlgebra",
    "two_photon_algebra",
    "schrodinger_algebra",
    "H6_GENERATORS",
    "SCH_GENERATORS",
]

H6_GENERATORS = ("B+", "N", "M", "A+", "A-", "B-")
SCH_GENERATORS = ("H", "D", "M", "P", "K", "C")

DEFAULT_FUEL = 10 ** 6

# deep relation tails unwind through recursion; words stay short but chains
# of adjacent swaps can nest a few hundred frames
if sys.getrecursionlimit() < 20000:
    sys.setrecursionlimit(20000)


class NormalOrderError(RuntimeError):
    """Rewriting ran out of fuel; signals an inconsistent relation table."""

    def __init__(self, algebra_name, word):
        self.word = word
        super().__init__(
            f"normal ordering exhausted its fuel in {algebra_name} on word {word!r}")


def _first_inversion(word):
    for i in range(len(word) - 1):
        if word[i] > word[i + 1]:
            return i
    return None


def _add_term(acc, word, series):
    cur = acc.get(word)
    acc[word] = series if cur is None else cur + series


def _prune(terms):
    return {w: s for w, s in terms.items() if not s.is_zero()}


# mutable-list accumulators for the rewriting hot path; immutable series
# allocation dominates the profile otherwise

def _acc_series(acc, word, series):
    cur = acc.get(word)
    if cur is None:
        acc[word] = list(series.coeffs)
    else:
        for i, c in enumerate(series.coeffs):
            if c != 0:
                cur[i] = cur[i] + c


def _acc_product(acc, word, a, b, order):
    """Accumulate the series product a*b onto acc[word] without allocating."""
    cur = acc.get(word)
    if cur is None:
        cur = acc[word] = [Fraction(0)] * (order + 1)
    for i, ca in enumerate(a.coeffs):
        if ca == 0:
            continue
        for j in range(order + 1 - i):
            cb = b.coeffs[j]
            if cb != 0:
                cur[i + j] = cur[i + j] + ca * cb


def _finalize_acc(acc, order):
    out = {}
    for w, coeffs in acc.items():
        if any(c != 0 for c in coeffs):
            out[w] = TruncatedSeries(coeffs, order)
    return out


class NCElement:
    """Sum of PBW-ordered words with TruncatedSeries coefficients."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms):
        self.algebra = algebra
        self.terms = _prune(terms)

    def _require_same(self, other):
        if self.algebra is not other.algebra:
            raise ValueError(
                f"algebra mismatch: {self.algebra.name} vs {other.algebra.name}")

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        self._require_same(other)
        acc = dict(self.terms)
        for w, s in other.terms.items():
            _add_term(acc, w, s)
        return NCElement(self.algebra, acc)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return NCElement(self.algebra, {w: -s for w, s in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, NCElement):
            return self.scale(other)
        self._require_same(other)
        alg = self.algebra
        order = alg.order
        acc = {}
        for wa, sa in self.terms.items():
            la = sa.low_order()
            for wb, sb in other.terms.items():
                if la + sb.low_order() > order:
                    continue
                s = sa * sb
                for w, c in alg.normal_word(wa + wb).items():
                    if s.low_order() + c.low_order() <= order:
                        _acc_product(acc, w, s, c, order)
        return NCElement(alg, _finalize_acc(acc, order))

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        return NCElement(self.algebra, {w: s * c for w, s in self.terms.items()})

    def commutator(self, other):
        return self * other - other * self

    def __eq__(self, other):
        if not isinstance(other, NCElement):
            return NotImplemented
        return self.algebra is other.algebra and self.terms == other.terms

    def __hash__(self):
        return hash((id(self.algebra), frozenset(self.terms.items())))

    def coefficient(self, word):
        return self.terms.get(tuple(word), self.algebra.zero_series())

    def __str__(self):
        return render_terms(self.algebra, self.terms)

    def __repr__(self):
        return f"<NCElement {self} in {self.algebra.name}>"


class TensorElement:
    """Rank 2 or 3 tensor with legs in PBW normal form.

    The tensor product is over the scalar series ring: multiplication acts
    legwise and there are no cross-leg relations.
    """

    __slots__ = ("algebra", "rank", "terms")

    def __init__(self, algebra, rank, terms):
        if rank not in (2, 3):
            raise ValueError("tensor rank must be 2 or 3")
        self.algebra = algebra
        self.rank = rank
        self.terms = _prune(terms)

    def _require_same(self, other):
        if self.algebra is not other.algebra or self.rank != other.rank:
            raise ValueError("tensor mismatch (algebra or rank)")

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        self._require_same(other)
        acc = dict(self.terms)
        for w, s in other.terms.items():
            _add_term(acc, w, s)
        return TensorElement(self.algebra, self.rank, acc)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return TensorElement(self.algebra, self.rank,
                             {w: -s for w, s in self.terms.items()})

    def scale(self, c):
        return TensorElement(self.algebra, self.rank,
                             {w: s * c for w, s in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, TensorElement):
            return self.scale(other)
        self._require_same(other)
        alg = self.algebra
        order = alg.order
        acc = {}
        for wa, sa in self.terms.items():
            la = sa.low_order()
            for wb, sb in other.terms.items():
                if la + sb.low_order() > order:
                    continue
                s = sa * sb
                low = s.low_order()
                legs = [alg.normal_word(wa[i] + wb[i]) for i in range(self.rank)]
                if self.rank == 2:
                    l0, l1 = legs
                    for w0, c0 in l0.items():
                        low0 = low + c0.low_order()
                        if low0 > order:
                            continue
                        s0 = s * c0
                        for w1, c1 in l1.items():
                            if low0 + c1.low_order() <= order:
                                _acc_product(acc, (w0, w1), s0, c1, order)
                else:
                    l0, l1, l2 = legs
                    for w0, c0 in l0.items():
                        low0 = low + c0.low_order()
                        if low0 > order:
                            continue
                        s0 = s * c0
                        for w1, c1 in l1.items():
                            low1 = low0 + c1.low_order()
                            if low1 > order:
                                continue
                            s1 = s0 * c1
                            for w2, c2 in l2.items():
                                if low1 + c2.low_order() <= order:
                                    _acc_product(acc, (w0, w1, w2), s1, c2, order)
        return TensorElement(alg, self.rank, _finalize_acc(acc, order))

    @staticmethod
    def _distribute(acc, legs, series):
        # cartesian product over the per-leg normal forms
        stack = [((), series)]
        for leg in legs:
            nxt = []
            for words, s in stack:
                for w, c in leg.items():
                    sc = s * c
                    if not sc.is_zero():
                        nxt.append((words + (w,), sc))
            stack = nxt
        for words, s in stack:
            _add_term(acc, words, s)

    def commutator(self, other):
        return self * other - other * self

    def swap(self):
        """Flip the two legs of a rank-2 tensor."""
        if self.rank != 2:
            raise ValueError("swap needs rank 2")
        return TensorElement(self.algebra, 2,
                             {(w2, w1): s for (w1, w2), s in self.terms.items()})

    def embed3(self, positions):
        """Embed a rank-2 tensor into rank 3 at the given leg positions."""
        if self.rank != 2:
            raise ValueError("embed3 needs rank 2")
        i, j = positions
        acc = {}
        for (w1, w2), s in self.terms.items():
            legs = [(), (), ()]
            legs[i], legs[j] = w1, w2
            _add_term(acc, tuple(legs), s)
        return TensorElement(self.algebra, 3, acc)

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return (self.algebra is other.algebra and self.rank == other.rank
                and self.terms == other.terms)

    def __hash__(self):
        return hash((id(self.algebra), self.rank, frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        alg = self.algebra
        parts = []
        for words in sorted(self.terms, key=_tensor_sort_key):
            s = self.terms[words]
            legs = " @ ".join(word_name(alg, w) or "1" for w in words)
            parts.append(f"({s})*{legs}")
        return " + ".join(parts)

    def __repr__(self):
        return f"<TensorElement rank {self.rank}: {self}>"


def _word_sort_key(word):
    return (len(word), word)


def _tensor_sort_key(words):
    return tuple(_word_sort_key(w) for w in words)


def word_name(algebra, word):
    """Render a PBW word like B+^2*N with generator names."""
    if not word:
        return ""
    parts = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        name = algebra.generators[word[i]]
        parts.append(name if j - i == 1 else f"{name}^{j - i}")
        i = j
    return "*".join(parts)


def render_terms(algebra, terms):
    if not terms:
        return "0"
    parts = []
    for word in sorted(terms, key=_word_sort_key):
        s = terms[word]
        name = word_name(algebra, word)
        parts.append(f"({s})" if not name else f"({s})*{name}")
    return " + ".join(parts)


class QuantumAlgebra:
    """A deformed enveloping algebra given by explicit PBW tables.

    ``relations`` maps each generator pair (hi, lo) with hi > lo to the
    normal form of [X_hi, X_lo]; the reversed bracket is the negative.
    Coproduct, antipode and counit tables hold the values on generators and
    are extended multiplicatively / anti-multiplicatively / as an algebra
    map. Tables are fixed after construction and every operation is pure up
    to idempotent memo caches, so results never depend on evaluation order;
    concurrent runners keep their own instances regardless.
    """

    def __init__(self, name, generators, order, relations, coproduct,
                 antipode, counit, central=(), fuel=DEFAULT_FUEL):
        self.name = name
        self.generators = tuple(generators)
        self.order = order
        self.central = frozenset(central)
        self._one = TruncatedSeries.one(order)
        self._zero = TruncatedSeries.zero(order)
        self._fuel_budget = fuel
        self._fuel = fuel
        self._nf_cache = {}
        self._cop_cache = {}
        self._anti_cache = {}

        self._relations = {}
        n = len(self.generators)
        for hi in range(n):
            for lo in range(hi):
                value = _prune(relations.get((hi, lo), {}))
                self._check_relation((hi, lo), value)
                self._relations[(hi, lo)] = value

        self.counit_table = {i: counit.get(i, self._zero) for i in range(n)}
        self.coproduct_table = {
            i: TensorElement(self, 2, {legs: self._as_series(c)
                                       for legs, c in coproduct[i].items()})
            for i in range(n)}
        # antipode values may arrive as raw (unordered) words
        self.antipode_table = {
            i: NCElement(self, self.normal_terms(antipode[i])) for i in range(n)}

    def _as_series(self, c):
        return c if isinstance(c, TruncatedSeries) else self._one * c

    # -- table sanity ---------------------------------------------------------

    def _check_relation(self, pair, value):
        """Terms must shorten the word or carry a positive z power.

        This is the termination precondition for the rewriting loop; checking
        it here converts a transcription slip into an immediate error.
        """
        for word, series in value.items():
            if tuple(sorted(word)) != word:
                raise ValueError(f"relation {pair}: word {word} is not PBW ordered")
            low = series.low_order()
            if len(word) > 1 and (low is None or low == 0):
                raise ValueError(
                    f"relation {pair}: term {word} neither shortens nor carries z")

    # -- element constructors -------------------------------------------------

    def zero_series(self):
        return self._zero

    def one_series(self):
        return self._one

    def zero(self):
        return NCElement(self, {})

    def one(self):
        return NCElement(self, {(): self._one})

    def gen_index(self, name):
        try:
            return self.generators.index(name)
        except ValueError:
            raise KeyError(f"unknown generator {name!r} in {self.name}") from None

    def gen(self, name):
        return NCElement(self, {(self.gen_index(name),): self._one})

    def element(self, raw_terms):
        """Build an element from a raw {word: coefficient} map, normal ordering it."""
        return NCElement(self, self.normal_terms(raw_terms))

    def tensor_one(self, rank=2):
        return TensorElement(self, rank, {((),) * rank: self._one})

    def tensor(self, raw_terms, rank=2):
        acc = {}
        for legs, c in raw_terms.items():
            series = c if isinstance(c, TruncatedSeries) else self._one * c
            nfs = [self.normal_word(tuple(w)) for w in legs]
            TensorElement._distribute(acc, nfs, series)
        return TensorElement(self, rank, acc)

    # -- normal ordering ------------------------------------------------------

    def normal_word(self, word):
        """PBW normal form of one raw word, as a {word: series} map."""
        self._fuel = self._fuel_budget
        return self._nf(tuple(word))

    def normal_terms(self, raw_terms):
        self._fuel = self._fuel_budget
        acc = {}
        for word, c in raw_terms.items():
            series = c if isinstance(c, TruncatedSeries) else self._one * c
            if series.is_zero():
                continue
            for w, s in self._nf(tuple(word)).items():
                sc = series * s
                if not sc.is_zero():
                    _add_term(acc, w, sc)
        return _prune(acc)

    def _nf(self, word):
        cached = self._nf_cache.get(word)
        if cached is not None:
            return cached
        i = _first_inversion(word)
        if i is None:
            out = {word: self._one}
            self._nf_cache[word] = out
            return out
        self._fuel -= 1
        if self._fuel <= 0:
            raise NormalOrderError(self.name, word)
        hi, lo = word[i], word[i + 1]
        head, tail = word[:i], word[i + 2:]
        acc = {}
        for w, s in self._nf(head + (lo, hi) + tail).items():
            _acc_series(acc, w, s)
        for rw, rs in self._relations[(hi, lo)].items():
            for w, s in self._nf(head + rw + tail).items():
                _acc_product(acc, w, rs, s, self.order)
        out = _finalize_acc(acc, self.order)
        self._nf_cache[word] = out
        return out

    # -- structure maps -------------------------------------------------------

    def relation(self, x, y):
        """[X, Y] for generator names, straight from the table."""
        i, j = self.gen_index(x), self.gen_index(y)
        if i == j:
            return self.zero()
        if i > j:
            return NCElement(self, dict(self._relations[(i, j)]))
        return -NCElement(self, dict(self._relations[(j, i)]))

    def commutator(self, x, y):
        return x * y - y * x

    def coproduct_word(self, word):
        cached = self._cop_cache.get(word)
        if cached is None:
            out = self.tensor_one()
            for g in word:
                out = out * self.coproduct_table[g]
            self._cop_cache[word] = cached = out
        return cached

    def coproduct(self, elem):
        acc = TensorElement(self, 2, {})
        for w, s in elem.terms.items():
            acc = acc + self.coproduct_word(w).scale(s)
        return acc

    def antipode_word(self, word):
        cached = self._anti_cache.get(word)
        if cached is None:
            out = self.one()
            for g in reversed(word):
                out = out * self.antipode_table[g]
            self._anti_cache[word] = cached = out
        return cached

    def antipode(self, elem):
        acc = self.zero()
        for w, s in elem.terms.items():
            acc = acc + self.antipode_word(w).scale(s)
        return acc

    def counit_word(self, word):
        out = self._one
        for g in word:
            out = out * self.counit_table[g]
            if out.is_zero():
                break
        return out

    def counit(self, elem):
        acc = self._zero
        for w, s in elem.terms.items():
            acc = acc + self.counit_word(w) * s
        return acc

    # -- export ---------------------------------------------------------------

    def to_json_dict(self):
        """Spec dump: generator order and all tables, coefficients as fraction pairs."""

        def series_json(s):
            return [[c.numerator, c.denominator] for c in s.coeffs]

        def words_json(terms):
            return [
                {"word": [self.generators[g] for g in w], "series": series_json(s)}
                for w, s in sorted(terms.items(), key=lambda kv: _word_sort_key(kv[0]))
            ]

        def tensor_json(te):
            return [
                {"legs": [[self.generators[g] for g in w] for w in words],
                 "series": series_json(s)}
                for words, s in sorted(te.terms.items(), key=lambda kv: _tensor_sort_key(kv[0]))
            ]

        return {
            "name": self.name,
            "order": self.order,
            "generators": list(self.generators),
            "central": sorted(self.generators[i] for i in self.central),
            "relations": {
                f"[{self.generators[hi]},{self.generators[lo]}]": words_json(val)
                for (hi, lo), val in sorted(self._relations.items())
            },
            "coproduct": {
                self.generators[i]: tensor_json(te)
                for i, te in sorted(self.coproduct_table.items())
            },
            "antipode": {
                self.generators[i]: words_json(el.terms)
                for i, el in sorted(self.antipode_table.items())
            },
            "counit": {
                self.generators[i]: series_json(s)
                for i, s in sorted(self.counit_table.items())
            },
        }


# -- built-in algebras ---------------------------------------------------------


def _exp_words(gen, base, order, lo=0, zshift=0, scale=Fraction(1), suffix=()):
    """Words gen^n * suffix with coefficient scale * base^n / n! at z^(n+zshift)."""
    out = {}
    n = lo
    while n + zshift <= order:
        coeff = scale * Fraction(base) ** n / factorial(n)
        out[(gen,) * n + suffix] = TruncatedSeries.z_power(n + zshift, order, coeff)
        n += 1
    return out


def _merge(*term_maps):
    acc = {}
    for terms in term_maps:
        for w, s in terms.items():
            _add_term(acc, w, s)
    return acc


def _prefix(head, term_map):
    """Prepend a fixed raw word segment to every key of a term map."""
    return {tuple(head) + w: s for w, s in term_map.items()}


def two_photon_algebra(order):
    """Deformed two-photon algebra U_z(h6) truncated at the given z order."""
    k = order
    B, N, M, AP, AM, BM = range(6)  # B+ N M A+ A- B-

    def zs(power, coeff=1):
        return TruncatedSeries.z_power(power, k, coeff)

    relations = {
        # [N, B+] = (e^{2zB+} - 1)/z
        (N, B): _exp_words(B, 2, k, lo=1, zshift=-1),
        (M, B): {}, (M, N): {},
        (AP, B): {}, (AP, N): {(AP,): zs(0, -1)}, (AP, M): {},
        # [A-, B+] = 2 e^{2zB+} A+
        (AM, B): _exp_words(B, 2, k, scale=Fraction(2), suffix=(AP,)),
        (AM, N): {(AM,): zs(0, 1)},
        (AM, M): {},
        (AM, AP): {(M,): zs(0, 1)},
        # [B-, B+] = 4N + 2M e^{2zB+}
        (BM, B): _merge({(N,): zs(0, 4)},
                        _exp_words(B, 2, k, scale=Fraction(2), suffix=(M,))),
        # [B-, N] = 2B- + 4z N^2
        (BM, N): {(BM,): zs(0, 2), (N, N): zs(1, 4)},
        (BM, M): {},
        # [B-, A+] = 2A- + 2z A+ - 4z N A+
        (BM, AP): {(AM,): zs(0, 2), (AP,): zs(1, 2), (N, AP): zs(1, -4)},
        # [B-, A-] = 2z A- + 4z N A-
        (BM, AM): {(AM,): zs(1, 2), (N, AM): zs(1, 4)},
    }

    primitive = lambda g: {((), (g,)): Fraction(1), ((g,), ()): Fraction(1)}
    coproduct = {
        B: primitive(B),
        M: primitive(M),
        # Delta(N) = 1 (x) N + N (x) e^{2zB+}
        N: _merge({((), (N,)): TruncatedSeries.one(k)},
                  {((N,), (B,) * n): zs(n, Fraction(2) ** n / factorial(n))
                   for n in range(k + 1)}),
        # Delta(A+) = 1 (x) A+ + A+ (x) e^{-zB+}
        AP: _merge({((), (AP,)): TruncatedSeries.one(k)},
                   {((AP,), (B,) * n): zs(n, Fraction(-1) ** n / factorial(n))
                    for n in range(k + 1)}),
        # Delta(A-) = 1 (x) A- + A- (x) e^{zB+} + 2z N (x) e^{2zB+} A+
        AM: _merge({((), (AM,)): TruncatedSeries.one(k)},
                   {((AM,), (B,) * n): zs(n, Fraction(1) / factorial(n))
                    for n in range(k + 1)},
                   {((N,), (B,) * n + (AP,)): zs(n + 1, 2 * Fraction(2) ** n / factorial(n))
                    for n in range(k)}),
        # Delta(B-) = 1 (x) B- + B- (x) e^{2zB+} + 2z N (x) e^{2zB+} M
        BM: _merge({((), (BM,)): TruncatedSeries.one(k)},
                   {((BM,), (B,) * n): zs(n, Fraction(2) ** n / factorial(n))
                    for n in range(k + 1)},
                   {((N,), (B,) * n + (M,)): zs(n + 1, 2 * Fraction(2) ** n / factorial(n))
                    for n in range(k)}),
    }

    antipode = {
        B: {(B,): zs(0, -1)},
        M: {(M,): zs(0, -1)},
        # gamma(N) = -N e^{-2zB+}
        N: _prefix((N,), _exp_words(B, -2, k, scale=Fraction(-1))),
        # gamma(A+) = -A+ e^{zB+}
        AP: _prefix((AP,), _exp_words(B, 1, k, scale=Fraction(-1))),
        # gamma(A-) = -(A- - 2z N A+) e^{-zB+}
        AM: _merge(_prefix((AM,), _exp_words(B, -1, k, scale=Fraction(-1))),
                   _prefix((N, AP), _exp_words(B, -1, k, zshift=1, scale=Fraction(2)))),
        # gamma(B-) = -(B- - 2z N M) e^{-2zB+}
        BM: _merge(_prefix((BM,), _exp_words(B, -2, k, scale=Fraction(-1))),
                   _prefix((N, M), _exp_words(B, -2, k, zshift=1, scale=Fraction(2)))),
    }

    counit = {i: TruncatedSeries.zero(k) for i in range(6)}

    return QuantumAlgebra("h6-twophoton", H6_GENERATORS, k, relations,
                          coproduct, antipode, counit, central=(M,))


def schrodinger_algebra(order):
    """Deformed Schrodinger algebra U_z(S(1+1)) truncated at the given z order."""
    k = order
    H, D, M, P, K, C = range(6)

    def zs(power, coeff=1):
        return TruncatedSeries.z_power(power, k, coeff)

    relations = {
        # [D, H] = (1 - e^{4zH})/(2z)
        (D, H): _exp_words(H, 4, k, lo=1, zshift=-1, scale=Fraction(-1, 2)),
        (M, H): {}, (M, D): {},
        (P, H): {}, (P, D): {(P,): zs(0, 1)}, (P, M): {},
        # [K, H] = e^{4zH} P
        (K, H): _exp_words(H, 4, k, suffix=(P,)),
        (K, D): {(K,): zs(0, -1)}, (K, M): {}, (K, P): {(M,): zs(0, 1)},
        # [C, H] = -D + (e^{4zH} - 1)/2 M
        (C, H): _merge({(D,): zs(0, -1)},
                       _exp_words(H, 4, k, lo=1, scale=Fraction(1, 2), suffix=(M,))),
        # [C, D] = -2C - 2z(D + M/2)^2
        (C, D): {(C,): zs(0, -2), (D, D): zs(1, -2), (D, M): zs(1, -2),
                 (M, M): zs(1, Fraction(-1, 2))},
        (C, M): {},
        # [C, P] = K + 2z DP + z P + z MP
        (C, P): {(K,): zs(0, 1), (D, P): zs(1, 2), (P,): zs(1, 1), (M, P): zs(1, 1)},
        # [C, K] = -2z DK + z K - z MK
        (C, K): {(D, K): zs(1, -2), (K,): zs(1, 1), (M, K): zs(1, -1)},
    }

    primitive = lambda g: {((), (g,)): Fraction(1), ((g,), ()): Fraction(1)}
    coproduct = {
        H: primitive(H),
        M: primitive(M),
        # Delta(P) = 1 (x) P + P (x) e^{-2zH}
        P: _merge({((), (P,)): TruncatedSeries.one(k)},
                  {((P,), (H,) * n): zs(n, Fraction(-2) ** n / factorial(n))
                   for n in range(k + 1)}),
        # Delta(D) = 1 (x) D + D (x) e^{4zH} + M (x) (e^{4zH}-1)/2
        D: _merge({((), (D,)): TruncatedSeries.one(k)},
                  {((D,), (H,) * n): zs(n, Fraction(4) ** n / factorial(n))
                   for n in range(k + 1)},
                  {((M,), (H,) * n): zs(n, Fraction(4) ** n / (2 * factorial(n)))
                   for n in range(1, k + 1)}),
        # Delta(K) = 1 (x) K + K (x) e^{2zH} - 2z (D + M/2) (x) e^{4zH} P
        K: _merge({((), (K,)): TruncatedSeries.one(k)},
                  {((K,), (H,) * n): zs(n, Fraction(2) ** n / factorial(n))
                   for n in range(k + 1)},
                  {((D,), (H,) * n + (P,)): zs(n + 1, -2 * Fraction(4) ** n / factorial(n))
                   for n in range(k)},
                  {((M,), (H,) * n + (P,)): zs(n + 1, -Fraction(4) ** n / factorial(n))
                   for n in range(k)}),
        # Delta(C) = 1 (x) C + C (x) e^{4zH} - z (D + M/2) (x) e^{4zH} M
        C: _merge({((), (C,)): TruncatedSeries.one(k)},
                  {((C,), (H,) * n): zs(n, Fraction(4) ** n / factorial(n))
                   for n in range(k + 1)},
                  {((D,), (H,) * n + (M,)): zs(n + 1, -Fraction(4) ** n / factorial(n))
                   for n in range(k)},
                  {((M,), (H,) * n + (M,)): zs(n + 1, -Fraction(4) ** n / (2 * factorial(n)))
                   for n in range(k)}),
    }

    antipode = {
        H: {(H,): zs(0, -1)},
        M: {(M,): zs(0, -1)},
        # gamma(D) = -(D + M/2) e^{-4zH} + M/2
        D: _merge(_prefix((D,), _exp_words(H, -4, k, scale=Fraction(-1))),
                  _prefix((M,), _exp_words(H, -4, k, scale=Fraction(-1, 2))),
                  {(M,): zs(0, Fraction(1, 2))}),
        # gamma(P) = -P e^{2zH}
        P: _prefix((P,), _exp_words(H, 2, k, scale=Fraction(-1))),
        # gamma(K) = -(K + 2z DP + z MP) e^{-2zH}
        K: _merge(_prefix((K,), _exp_words(H, -2, k, scale=Fraction(-1))),
                  _prefix((D, P), _exp_words(H, -2, k, zshift=1, scale=Fraction(-2))),
                  _prefix((M, P), _exp_words(H, -2, k, zshift=1, scale=Fraction(-1)))),
        # gamma(C) = -(C + z DM + z M^2/2) e^{-4zH}
        C: _merge(_prefix((C,), _exp_words(H, -4, k, scale=Fraction(-1))),
                  _prefix((D, M), _exp_words(H, -4, k, zshift=1, scale=Fraction(-1))),
                  _prefix((M, M), _exp_words(H, -4, k, zshift=1, scale=Fraction(-1, 2)))),
    }

    counit = {i: TruncatedSeries.zero(k) for i in range(6)}

    return QuantumAlgebra("schrodinger11", SCH_GENERATORS, k, relations,
                          coproduct, antipode, counit, central=(M,))
