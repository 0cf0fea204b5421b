"""Classical layer: structure constants, r-matrices, cocommutators.

The deformation parameter stays a formal scalar here. The classical
Yang-Baxter and 1-cocycle conditions are homogeneous in it, so wedges store
plain rational coefficients of the single z power they carry.
"""

from __future__ import annotations

from fractions import Fraction

from .report import CheckResult

__all__ = [
    "LieAlgebra", "WedgeElement",
    "two_photon_lie", "schrodinger_lie",
    "H6_TO_SCH_MAP", "SL2_EXT_MAP",
    "cocommutator_from_r", "delta_table_from_r",
    "verify_cybe", "verify_cocycle", "basis_change",
    "H6_R_MATRIX", "SCH_R_MATRIX",
    "H6_DELTA_TABLE", "SCH_DELTA_TABLE",
]


class WedgeElement:
    """Antisymmetric rank-2 tensor, stored on index pairs i < j."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        acc = {}
        for (i, j), c in dict(coeffs).items():
            c = Fraction(c)
            if c == 0:
                continue
            if i == j:
                raise ValueError("diagonal wedge entry")
            if i < j:
                acc[(i, j)] = acc.get((i, j), Fraction(0)) + c
            else:
                acc[(j, i)] = acc.get((j, i), Fraction(0)) - c
        self.coeffs = {k: v for k, v in acc.items() if v != 0}

    def add_pair(self, i, j, c):
        """Accumulate c * Xi ^ Xj (antisymmetrized into canonical slots)."""
        new = dict(self.coeffs)
        if i == j or c == 0:
            return WedgeElement(new)
        key, val = ((i, j), Fraction(c)) if i < j else ((j, i), -Fraction(c))
        new[key] = new.get(key, Fraction(0)) + val
        return WedgeElement(new)

    def __add__(self, other):
        acc = dict(self.coeffs)
        for k, v in other.coeffs.items():
            acc[k] = acc.get(k, Fraction(0)) + v
        return WedgeElement(acc)

    def __neg__(self):
        return WedgeElement({k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return WedgeElement({k: v * Fraction(c) for k, v in self.coeffs.items()})

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, WedgeElement):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def render(self, basis):
        if not self.coeffs:
            return "0"
        parts = []
        for (i, j) in sorted(self.coeffs):
            c = self.coeffs[(i, j)]
            coeff = "" if c == 1 else ("-" if c == -1 else f"{c}*")
            parts.append(f"{coeff}{basis[i]}^{basis[j]}")
        return " + ".join(parts)


class LieAlgebra:
    """Finite-dimensional Lie algebra with exact structure constants.

    ``brackets`` maps (i, j) with i > j to the coefficient vector of
    [X_i, X_j]; antisymmetry fills in the rest. The constructor checks the
    Jacobi identity, so an instance is a certificate of consistency.
    """

    def __init__(self, name, basis, brackets, check_jacobi=True):
        self.name = name
        self.basis = tuple(basis)
        n = len(self.basis)
        table = {}
        for i in range(n):
            for j in range(i):
                vec = {k: Fraction(v) for k, v in brackets.get((i, j), {}).items()
                       if Fraction(v) != 0}
                table[(i, j)] = vec
        self.table = table
        if check_jacobi:
            bad = self.jacobi_violations()
            if bad:
                raise ValueError(f"{name}: Jacobi identity fails at {bad[0]}")

    @property
    def dim(self):
        return len(self.basis)

    def index(self, name):
        return self.basis.index(name)

    def bracket_basis(self, i, j):
        """[X_i, X_j] as a coefficient vector."""
        if i == j:
            return {}
        if i > j:
            return dict(self.table[(i, j)])
        return {k: -v for k, v in self.table[(j, i)].items()}

    def bracket(self, va, vb):
        """Bracket of two coefficient vectors."""
        acc = {}
        for i, a in va.items():
            if a == 0:
                continue
            for j, b in vb.items():
                ab = a * b
                if ab == 0:
                    continue
                for k, c in self.bracket_basis(i, j).items():
                    acc[k] = acc.get(k, Fraction(0)) + ab * c
        return {k: v for k, v in acc.items() if v != 0}

    def jacobi_violations(self):
        out = []
        n = self.dim
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    acc = {}
                    for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
                        inner = self.bracket_basis(b, c)
                        for m, v in self.bracket({a: Fraction(1)}, inner).items():
                            acc[m] = acc.get(m, Fraction(0)) + v
                    if any(v != 0 for v in acc.values()):
                        out.append((self.basis[i], self.basis[j], self.basis[k]))
        return out

    def render_vector(self, vec):
        if not vec:
            return "0"
        parts = []
        for i in sorted(vec):
            c = vec[i]
            coeff = "" if c == 1 else ("-" if c == -1 else f"{c}*")
            parts.append(f"{coeff}{self.basis[i]}")
        return " + ".join(parts)


# -- built-in classical algebras -------------------------------------------------

H6_BASIS = ("B+", "N", "M", "A+", "A-", "B-")
SCH_BASIS = ("H", "D", "M", "P", "K", "C")


def two_photon_lie():
    B, N, M, AP, AM, BM = range(6)
    brackets = {
        (N, B): {B: 2},            # [N, B+] = 2B+
        (AP, N): {AP: -1},         # [A+, N] = -A+
        (AM, B): {AP: 2},          # [A-, B+] = 2A+
        (AM, N): {AM: 1},
        (AM, AP): {M: 1},          # [A-, A+] = M
        (BM, B): {N: 4, M: 2},     # [B-, B+] = 4N + 2M
        (BM, N): {BM: 2},
        (BM, AP): {AM: 2},         # [B-, A+] = 2A-
    }
    return LieAlgebra("h6", H6_BASIS, brackets)


def schrodinger_lie():
    H, D, M, P, K, C = range(6)
    brackets = {
        (D, H): {H: -2},           # [D, H] = -2H
        (P, D): {P: 1},            # [P, D] = P
        (K, H): {P: 1},            # [K, H] = P
        (K, D): {K: -1},
        (K, P): {M: 1},            # [K, P] = M
        (C, H): {D: -1},           # [C, H] = -D
        (C, D): {C: -2},
        (C, P): {K: 1},            # [C, P] = K
    }
    return LieAlgebra("schrodinger", SCH_BASIS, brackets)


# h6 -> Schrodinger basis change: rows give the new generators in h6 coordinates
H6_TO_SCH_MAP = (
    ("H", {0: Fraction(1, 2)}),                  # H = B+/2
    ("D", {1: Fraction(-1), 2: Fraction(-1, 2)}),  # D = -N - M/2
    ("M", {2: Fraction(1)}),
    ("P", {3: Fraction(1)}),                     # P = A+
    ("K", {4: Fraction(1)}),                     # K = A-
    ("C", {5: Fraction(1, 2)}),                  # C = B-/2
)

# extended sl(2, R) inside h6
SL2_EXT_MAP = (
    ("J+", {0: Fraction(1, 2)}),    # J+ = B+/2
    ("J-", {5: Fraction(-1, 2)}),   # J- = -B-/2
    ("J3", {1: Fraction(1)}),       # J3 = N
    ("I", {2: Fraction(-1, 2)}),    # I = -M/2
)

# r-matrix wedges (coefficient of one power of z)
H6_R_MATRIX = WedgeElement({(0, 1): Fraction(-1)})                    # z N ^ B+
SCH_R_MATRIX = WedgeElement({(0, 1): Fraction(2), (0, 2): Fraction(1)})  # 2z H^D + z H^M

# the displayed cocommutator tables, one z power implicit
H6_DELTA_TABLE = {
    "B+": WedgeElement(),
    "M": WedgeElement(),
    "N": WedgeElement({(0, 1): -2}),                  # 2 N ^ B+
    "A+": WedgeElement({(0, 3): 1}),                  # -A+ ^ B+
    "A-": WedgeElement({(0, 4): -1, (1, 3): 2}),      # A- ^ B+ + 2 N ^ A+
    "B-": WedgeElement({(0, 5): -2, (1, 2): 2}),      # 2(B- ^ B+ + N ^ M)
}
SCH_DELTA_TABLE = {
    "H": WedgeElement(),
    "M": WedgeElement(),
    "P": WedgeElement({(0, 3): 2}),                   # -2 P ^ H
    "D": WedgeElement({(0, 1): -4, (0, 2): -2}),      # 4 D ^ H + 2 M ^ H
    "K": WedgeElement({(0, 4): -2, (1, 3): -2, (2, 3): -1}),
    "C": WedgeElement({(0, 5): -4, (1, 2): -1}),      # 4 C ^ H - D ^ M
}


# -- bialgebra operations ---------------------------------------------------------


def cocommutator_from_r(lie, r, name):
    """delta(X) = [X (x) 1 + 1 (x) X, r], evaluated through structure constants."""
    x = lie.index(name) if isinstance(name, str) else name
    out = WedgeElement()
    for (a, b), c in r.coeffs.items():
        # acting on Xa ^ Xb = Xa (x) Xb - Xb (x) Xa keeps the result a wedge
        for m, v in lie.bracket_basis(x, a).items():
            out = out.add_pair(m, b, c * v)
        for m, v in lie.bracket_basis(x, b).items():
            out = out.add_pair(a, m, c * v)
    return out


def delta_table_from_r(lie, r):
    return {name: cocommutator_from_r(lie, r, name) for name in lie.basis}


def _schouten_bracket(lie, r):
    """[[r, r]] = [r12, r13] + [r12, r23] + [r13, r23] as a dense rank-3 tensor."""
    n = lie.dim
    full = {}
    for (i, j), c in r.coeffs.items():
        full[(i, j)] = full.get((i, j), Fraction(0)) + c
        full[(j, i)] = full.get((j, i), Fraction(0)) - c
    acc = {}

    def add(key, v):
        if v != 0:
            acc[key] = acc.get(key, Fraction(0)) + v

    for (i, j), cij in full.items():
        for (k, l), ckl in full.items():
            w = cij * ckl
            for m, v in lie.bracket_basis(i, k).items():
                add((m, j, l), w * v)     # [r12, r13]
            for m, v in lie.bracket_basis(j, k).items():
                add((i, m, l), w * v)     # [r12, r23]
            for m, v in lie.bracket_basis(j, l).items():
                add((i, k, m), w * v)     # [r13, r23]
    return {k: v for k, v in acc.items() if v != 0}


def verify_cybe(lie, r, label="r"):
    """Classical Yang-Baxter equation: the Schouten bracket vanishes."""
    residual = _schouten_bracket(lie, r)
    text = "0" if not residual else " + ".join(
        f"{v}*{lie.basis[a]}(x){lie.basis[b]}(x){lie.basis[c]}"
        for (a, b, c), v in sorted(residual.items()))
    return CheckResult(name=f"bialgebra/{lie.name}/cybe/{label}",
                       passed=not residual, residual=text)


def verify_cocycle(lie, delta_table):
    """1-cocycle condition and co-Jacobi identity for a full delta table."""
    entries = []
    n = lie.dim
    deltas = [delta_table[lie.basis[i]] for i in range(n)]

    def ad_on_wedge(x, w):
        out = WedgeElement()
        for (a, b), c in w.coeffs.items():
            for m, v in lie.bracket_basis(x, a).items():
                out = out.add_pair(m, b, c * v)
            for m, v in lie.bracket_basis(x, b).items():
                out = out.add_pair(a, m, c * v)
        return out

    bad = []
    for i in range(n):
        for j in range(i):
            lhs = WedgeElement()
            for k, v in lie.bracket_basis(i, j).items():
                lhs = lhs + deltas[k].scale(v)
            rhs = ad_on_wedge(i, deltas[j]) - ad_on_wedge(j, deltas[i])
            if lhs != rhs:
                bad.append(f"delta([{lie.basis[i]},{lie.basis[j]}])")
    entries.append(CheckResult(
        name=f"bialgebra/{lie.name}/cocycle", passed=not bad,
        residual="0" if not bad else "; ".join(bad)))

    bad = []
    for i in range(n):
        acc = {}
        for (a, b), c in deltas[i].coeffs.items():
            for (p, q), d in ((a, b), Fraction(1)), ((b, a), Fraction(-1)):
                for (u, v), e in deltas[p].coeffs.items():
                    for (s, t), f in ((u, v), Fraction(1)), ((v, u), Fraction(-1)):
                        w = c * d * e * f
                        # cyclic sum over the three tensor slots
                        for key in ((s, t, q), (t, q, s), (q, s, t)):
                            acc[key] = acc.get(key, Fraction(0)) + w
        if any(v != 0 for v in acc.values()):
            bad.append(f"co-Jacobi({lie.basis[i]})")
    entries.append(CheckResult(
        name=f"bialgebra/{lie.name}/co-jacobi", passed=not bad,
        residual="0" if not bad else "; ".join(bad)))
    return entries


def _solve_in_span(rows, target, dim):
    """Write target as a combination of row vectors; None if impossible."""
    # gaussian elimination over the fractions, tracking combination coefficients
    mat = [[row.get(i, Fraction(0)) for i in range(dim)] + [Fraction(0)] * len(rows)
           for row in rows]
    for r, vals in enumerate(mat):
        vals[dim + r] = Fraction(1)
    tgt = [target.get(i, Fraction(0)) for i in range(dim)]

    pivots = []
    col = 0
    r = 0
    while r < len(mat) and col < dim:
        piv = next((i for i in range(r, len(mat)) if mat[i][col] != 0), None)
        if piv is None:
            col += 1
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        scale = mat[r][col]
        mat[r] = [v / scale for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append((r, col))
        r += 1
        col += 1

    coeffs = [Fraction(0)] * len(rows)
    residual = list(tgt)
    for r, col in pivots:
        f = residual[col]
        if f == 0:
            continue
        for i in range(dim):
            residual[i] -= f * mat[r][i]
        for i in range(len(rows)):
            coeffs[i] += f * mat[r][dim + i]
    if any(v != 0 for v in residual):
        return None
    return coeffs


def basis_change(lie, rows):
    """New Lie algebra on the span of ``rows`` (name, coefficient-vector pairs).

    The rows must be linearly independent and their span closed under the
    bracket; otherwise this raises ValueError.
    """
    names = [name for name, _ in rows]
    vecs = [{k: Fraction(v) for k, v in vec.items()} for _, vec in rows]
    for idx in range(len(vecs)):
        if _solve_in_span(vecs[:idx] + vecs[idx + 1:], vecs[idx], lie.dim) is not None:
            raise ValueError(f"singular basis map: {names[idx]} is dependent")

    brackets = {}
    for i in range(len(vecs)):
        for j in range(i):
            value = lie.bracket(vecs[i], vecs[j])
            coeffs = _solve_in_span(vecs, value, lie.dim)
            if coeffs is None:
                raise ValueError(
                    f"[{names[i]},{names[j]}] leaves the span: {lie.render_vector(value)}")
            brackets[(i, j)] = {k: c for k, c in enumerate(coeffs) if c != 0}
    return LieAlgebra(f"{lie.name}-mapped", names, brackets)
