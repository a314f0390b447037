"""Chevalley-Eilenberg complex of left-invariant forms."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Mapping

from .lie import LieAlgebra
from .linalg import ContractError, Matrix, congruence_diagonalize, format_rational, kernel, to_rational


@dataclass(frozen=True)
class KForm:
    """Exterior k-form ``sum coeffs[I] e^I`` over strictly increasing 0-based I."""

    degree: int
    dim: int
    coeffs: Mapping[tuple[int, ...], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for idx, v in self.coeffs.items():
            idx = tuple(idx)
            v = to_rational(v)
            if len(idx) != self.degree:
                raise ContractError(f"index {idx} has wrong length for a {self.degree}-form")
            if any(a >= b for a, b in zip(idx, idx[1:])) or any(not 0 <= i < self.dim for i in idx):
                raise ContractError(f"index tuple {idx} must be strictly increasing and in range")
            if v != 0:
                clean[idx] = v
        object.__setattr__(self, "coeffs", clean)
        if self.degree < 0:
            raise ContractError("negative degree")

    @classmethod
    def basis(cls, dim: int, *indices: int) -> "KForm":
        """e^{i1...ik} for 0-based indices in any order (sign adjusted)."""
        sign, idx = _sort_sign(indices)
        if sign == 0:
            return cls(len(indices), dim, {})
        return cls(len(indices), dim, {idx: Fraction(sign)})

    @classmethod
    def from_vector(cls, degree: int, dim: int, vec) -> "KForm":
        vals = vec.flat() if isinstance(vec, Matrix) else list(vec)
        return cls(degree, dim, {idx: v for idx, v in zip(monomials(dim, degree), vals)})

    def vector(self) -> list[Fraction]:
        return [self.coeffs.get(idx, Fraction(0)) for idx in monomials(self.dim, self.degree)]

    def __add__(self, other: "KForm") -> "KForm":
        self._same(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, Fraction(0)) + v
        return KForm(self.degree, self.dim, out)

    def __neg__(self) -> "KForm":
        return KForm(self.degree, self.dim, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other: "KForm") -> "KForm":
        return self + (-other)

    def scale(self, c) -> "KForm":
        c = to_rational(c)
        return KForm(self.degree, self.dim, {k: c * v for k, v in self.coeffs.items()})

    __rmul__ = scale

    def __xor__(self, other: "KForm") -> "KForm":
        return wedge(self, other)

    def is_zero(self) -> bool:
        return not self.coeffs

    def _same(self, other: "KForm"):
        if (self.degree, self.dim) != (other.degree, other.dim):
            raise ContractError("forms of different degree or ambient dimension")

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for idx in sorted(self.coeffs):
            parts.append(f"{format_rational(self.coeffs[idx])}*e^{''.join(str(i + 1) for i in idx)}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "terms": [{"idx": [i + 1 for i in idx], "c": format_rational(v)}
                      for idx, v in sorted(self.coeffs.items())],
        }

    @classmethod
    def from_json(cls, data: Mapping, dim: int) -> "KForm":
        out: dict[tuple[int, ...], Fraction] = {}
        for t in data["terms"]:
            sign, idx = _sort_sign([i - 1 for i in t["idx"]])
            if sign:
                out[idx] = out.get(idx, Fraction(0)) + sign * to_rational(t["c"])
        return cls(int(data["degree"]), dim, out)


def _sort_sign(indices: Iterable[int]) -> tuple[int, tuple[int, ...]]:
    idx = list(indices)
    if len(set(idx)) != len(idx):
        return 0, ()
    sign = 1
    # insertion sort, counting transpositions
    for a in range(1, len(idx)):
        b = a
        while b > 0 and idx[b - 1] > idx[b]:
            idx[b - 1], idx[b] = idx[b], idx[b - 1]
            sign = -sign
            b -= 1
    return sign, tuple(idx)


@lru_cache(maxsize=None)
def monomials(dim: int, degree: int) -> tuple[tuple[int, ...], ...]:
    return tuple(combinations(range(dim), degree))


def wedge(a: KForm, b: KForm) -> KForm:
    if a.dim != b.dim:
        raise ContractError("wedge of forms on different spaces")
    deg = a.degree + b.degree
    if deg > a.dim:
        return KForm(deg, a.dim, {})
    out: dict[tuple[int, ...], Fraction] = {}
    for (i, x), (j, y) in product(a.coeffs.items(), b.coeffs.items()):
        sign, idx = _sort_sign(i + j)
        if sign:
            out[idx] = out.get(idx, Fraction(0)) + sign * x * y
    return KForm(deg, a.dim, out)


def _d_basis_one_form(lie: LieAlgebra, k: int) -> dict[tuple[int, int], Fraction]:
    return {(i, j): lie.c(i, j, k) for i, j in combinations(range(lie.dim), 2) if lie.c(i, j, k)}


def ce_d(lie: LieAlgebra, form: KForm) -> KForm:
    """Chevalley-Eilenberg differential.

    On covectors ``d e^k = sum_{i<j} c_ij^k e^{ij}``; extended to higher
    degree as an antiderivation.
    """
    if form.dim != lie.dim:
        raise ContractError("form and algebra have different dimensions")
    n = lie.dim
    if form.degree >= n:
        return KForm(form.degree + 1, n, {})
    d1 = [_d_basis_one_form(lie, k) for k in range(n)]
    out: dict[tuple[int, ...], Fraction] = {}
    for idx, coeff in form.coeffs.items():
        for pos, k in enumerate(idx):
            rest_before, rest_after = idx[:pos], idx[pos + 1:]
            sign_pos = -coeff if pos % 2 else coeff
            for (i, j), c in d1[k].items():
                sign, new = _sort_sign(rest_before + (i, j) + rest_after)
                if sign:
                    out[new] = out.get(new, Fraction(0)) + sign * sign_pos * c
    return KForm(form.degree + 1, n, out)


def d_matrix(lie: LieAlgebra, degree: int) -> Matrix:
    """Matrix of d: Λ^degree -> Λ^(degree+1) in the lexicographic monomial bases."""
    n = lie.dim
    src = monomials(n, degree)
    if degree >= n:
        return Matrix.zeros(0, len(src))
    tgt = monomials(n, degree + 1)
    pos = {idx: r for r, idx in enumerate(tgt)}
    cols = []
    for idx in src:
        image = ce_d(lie, KForm(degree, n, {idx: Fraction(1)}))
        col = [Fraction(0)] * len(tgt)
        for t, v in image.coeffs.items():
            col[pos[t]] = v
        cols.append(col)
    if not cols:
        return Matrix.zeros(len(tgt), 0)
    return Matrix(list(zip(*cols)))


def betti(lie: LieAlgebra, k: int) -> int:
    n = lie.dim
    if not 0 <= k <= n:
        raise ContractError(f"degree {k} outside 0..{n}")
    size = len(monomials(n, k))
    rank_out = d_matrix(lie, k).rank() if k < n else 0
    rank_in = d_matrix(lie, k - 1).rank() if k > 0 else 0
    return size - rank_out - rank_in


def is_closed(lie: LieAlgebra, form: KForm) -> bool:
    return ce_d(lie, form).is_zero()


def is_decomposable(form: KForm) -> bool:
    """A 2-form is decomposable iff its wedge square vanishes."""
    if form.degree != 2:
        raise ContractError("decomposability test is for 2-forms")
    if form.dim < 4:
        return True
    return wedge(form, form).is_zero()


def exact_two_forms(lie: LieAlgebra) -> list[KForm]:
    """Basis of d(Λ^1), taken from the independent columns of d."""
    d1 = d_matrix(lie, 1)
    if d1.rows == 0:
        return []
    _, pivots = d1.rref()
    return [KForm.from_vector(2, lie.dim, d1.col(p)) for p in pivots]


# ---------------------------------------------------------------------------
# decomposable exact two-forms


class Nu2Unsupported(NotImplementedError):
    """The quadratic system falls outside the exactly solvable cases."""


def _wedge_square_forms(forms: list[KForm]) -> list[Matrix]:
    """Symmetric matrices M_c with (sum t_a w_a)^2 coordinate c = t^T M_c t."""
    m = len(forms)
    coords: dict[tuple[int, ...], list[list[Fraction]]] = {}
    for a in range(m):
        for b in range(a, m):
            w = wedge(forms[a], forms[b])
            for idx, v in w.coeffs.items():
                mat = coords.setdefault(idx, [[Fraction(0)] * m for _ in range(m)])
                if a == b:
                    mat[a][a] += v
                else:
                    mat[a][b] += v
                    mat[b][a] += v
    return [Matrix(mat) for _, mat in sorted(coords.items())]


def _independent_forms(quads: list[Matrix]) -> list[Matrix]:
    if not quads:
        return []
    m = quads[0].rows
    stacked = Matrix([q.flat() for q in quads])
    _, piv = stacked.T.rref()
    return [quads[p] for p in piv] if m else []


def _square_root(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    from math import isqrt

    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _zero_cone_span(quads: list[Matrix], basis: Matrix) -> Matrix:
    """Span of the real common zeros of ``x^T Q x`` for x in the column span of ``basis``.

    Returns a matrix whose columns are a basis of that span (in ambient
    coordinates).  Every branch is an exact reduction:

    * semidefinite member Q: the zeros lie in ker Q;
    * member of rank one or two splitting into rational linear factors:
      the zeros lie on one of the (at most two) hyperplanes;
    * a single remaining form that is indefinite: its zeros span everything.
    """
    k = basis.cols
    if k == 0:
        return basis
    restricted = [basis.T @ q @ basis for q in quads]
    restricted = _independent_forms([q for q in restricted if not q.is_zero()])
    if not restricted:
        return basis
    if k == 1:
        return Matrix.zeros(basis.rows, 0)

    # pass 1: semidefinite members collapse onto their kernel
    for q in restricted:
        d, p = congruence_diagonalize(q)
        if all(x >= 0 for x in d) or all(x <= 0 for x in d):
            ker = kernel(q)
            if not ker:
                return Matrix.zeros(basis.rows, 0)
            sub = basis @ Matrix.from_columns(ker)
            return _zero_cone_span(quads, sub)

    # pass 2: rational factorisation of rank-two members
    for q in restricted:
        d, p = congruence_diagonalize(q)
        nz = [i for i, x in enumerate(d) if x != 0]
        if len(nz) != 2:
            continue
        a, b = d[nz[0]], d[nz[1]]
        r = _square_root(-a / b)
        if r is None:
            continue
        # q = a*y0^2 + b*y1^2 = a*(y0 - s*y1)(y0 + s*y1) with y = P^{-1} x, s^2 = -b/a
        s = 1 / r
        pinv = p.inverse()
        pieces = []
        for sign in (1, -1):
            coeffs = [Fraction(0)] * k
            for t in range(k):
                coeffs[t] = pinv[nz[0], t] - sign * s * pinv[nz[1], t]
            plane = kernel(Matrix([coeffs]))
            pieces.append(_zero_cone_span(quads, basis @ Matrix.from_columns(plane)))
        cols = [c for piece in pieces for c in (piece.col(j) for j in range(piece.cols))]
        if not cols:
            return Matrix.zeros(basis.rows, 0)
        full = Matrix.from_columns(cols)
        _, piv = full.rref()
        return Matrix.from_columns([cols[j] for j in piv])

    if len(restricted) == 1:
        # single indefinite form: its real zero cone is not contained in any hyperplane
        return basis
    if k == 2:
        # a shared root line would be rational (then some member factors over Q)
        # or irrational (then, with its conjugate, both forms would be proportional)
        return Matrix.zeros(basis.rows, 0)
    raise Nu2Unsupported(
        f"{len(restricted)} independent indefinite quadrics in {k} variables without rational factors")


def nu2(lie: LieAlgebra) -> int:
    """Dimension of the span of decomposable exact 2-forms."""
    if lie.dim > 9:
        raise ContractError("nu2 is only supported up to dimension 9")
    forms = exact_two_forms(lie)
    if not forms:
        return 0
    quads = _wedge_square_forms(forms)
    return _zero_cone_span(quads, Matrix.identity(len(forms))).cols


def nu2_grid(lie: LieAlgebra, bound: int = 8) -> int:
    """Brute-force ν² over integer coefficient vectors with entries in [-bound, bound].

    Checks ``beta ^ beta == 0`` directly on every grid combination of the
    exact forms; projectively this covers all rationals of height <= bound.
    """
    forms = exact_two_forms(lie)
    m = len(forms)
    if m == 0:
        return 0
    found: list[Matrix] = []
    rng = range(-bound, bound + 1)
    for t in product(rng, repeat=m):
        if not any(t):
            continue
        beta = KForm(2, lie.dim, {})
        for c, w in zip(t, forms):
            if c:
                beta = beta + w.scale(c)
        if wedge(beta, beta).is_zero():
            found.append(Matrix.column(t))
            if len(found) > m and Matrix.from_columns(found).rank() == m:
                return m
    if not found:
        return 0
    return Matrix.from_columns(found).rank()
