"""Lie algebras given by exact structure constants.

Basis vectors are indexed from 0 internally; Salamon strings and JSON use
the 1-based labels printed in the literature.  The differential convention
is ``d e^k = sum_{i<j} c_ij^k e^{ij}`` where ``[e_i, e_j] = sum_k c_ij^k e_k``,
so that ``(0,0,12)`` is the Heisenberg algebra with ``[e_1, e_2] = e_3``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from .linalg import (
    ContractError,
    Matrix,
    format_rational,
    in_span,
    kernel,
    span_rank,
    to_rational,
)


class JacobiError(ValueError):
    def __init__(self, triple: tuple[int, int, int], defect: Matrix):
        self.triple = triple
        self.defect = defect
        i, j, k = (t + 1 for t in triple)
        super().__init__(f"Jacobi identity fails on (e{i}, e{j}, e{k})")


class SalamonParseError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


class LieAlgebra:
    """Finite-dimensional real Lie algebra with rational structure constants.

    ``brackets`` maps ``(i, j)`` with ``i < j`` to ``{k: c_ij^k}``; only the
    upper triangle is stored, antisymmetry is implied.
    """

    def __init__(self, dim: int, brackets: Mapping[tuple[int, int], Mapping[int, object]] | None = None,
                 name: str | None = None, validate: bool = True):
        if dim < 1:
            raise ContractError("a Lie algebra needs dimension >= 1")
        self.dim = dim
        self.name = name
        c = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), out in (brackets or {}).items():
            if not (0 <= i < dim and 0 <= j < dim) or i == j:
                raise ContractError(f"bad bracket index pair {(i, j)}")
            for k, v in out.items():
                if not 0 <= k < dim:
                    raise ContractError(f"bad bracket output index {k}")
                v = to_rational(v)
                c[i][j][k] += v
                c[j][i][k] -= v
        self._c = tuple(tuple(tuple(col) for col in row) for row in c)
        self._ad = tuple(
            Matrix._raw(tuple(tuple(self._c[i][j][k] for j in range(dim)) for k in range(dim)), dim)
            for i in range(dim)
        )
        if validate:
            ok, witness = check_jacobi(self)
            if not ok:
                raise JacobiError(witness, jacobiator(self, *witness))

    # -- structure constants --------------------------------------------
    def c(self, i: int, j: int, k: int) -> Fraction:
        """Coefficient of e_k in [e_i, e_j]."""
        return self._c[i][j][k]

    @property
    def brackets(self) -> dict[tuple[int, int], dict[int, Fraction]]:
        out = {}
        for i, j in combinations(range(self.dim), 2):
            vec = {k: v for k, v in enumerate(self._c[i][j]) if v != 0}
            if vec:
                out[(i, j)] = vec
        return out

    def basis_bracket(self, i: int, j: int) -> Matrix:
        return Matrix._raw(tuple((v,) for v in self._c[i][j]), 1)

    def ad(self, i: int) -> Matrix:
        """Matrix of ad(e_i); column j is [e_i, e_j]."""
        return self._ad[i]

    def ad_vector(self, x: Matrix) -> Matrix:
        out = Matrix.zeros(self.dim)
        for i, xi in enumerate(x.flat()):
            if xi:
                out = out + self._ad[i].scale(xi)
        return out

    def bracket(self, x: Matrix, y: Matrix) -> Matrix:
        xs, ys = x.flat(), y.flat()
        out = [Fraction(0)] * self.dim
        for i, xi in enumerate(xs):
            if not xi:
                continue
            row = self._c[i]
            for j, yj in enumerate(ys):
                if yj and i != j:
                    w = xi * yj
                    for k, v in enumerate(row[j]):
                        if v:
                            out[k] += w * v
        return Matrix._raw(tuple((v,) for v in out), 1)

    def is_abelian(self) -> bool:
        return all(v == 0 for row in self._c for col in row for v in col)

    def __eq__(self, other) -> bool:
        return isinstance(other, LieAlgebra) and self.dim == other.dim and self._c == other._c

    def __hash__(self) -> int:
        return hash((self.dim, self._c))

    def __repr__(self) -> str:
        label = f"{self.name} " if self.name else ""
        return f"<LieAlgebra {label}{print_salamon(self)}>"

    # -- derived constructions ------------------------------------------
    def change_basis(self, p: Matrix, name: str | None = None) -> "LieAlgebra":
        """Same algebra written in the basis given by the columns of ``p``."""
        if not p.is_invertible() or p.rows != self.dim:
            raise ContractError("change of basis must be invertible")
        pinv = p.inverse()
        cols = [p.col(a) for a in range(self.dim)]
        br = {}
        for a, b in combinations(range(self.dim), 2):
            v = pinv @ self.bracket(cols[a], cols[b])
            out = {k: x for k, x in enumerate(v.flat()) if x}
            if out:
                br[(a, b)] = out
        return LieAlgebra(self.dim, br, name=name or self.name, validate=False)

    def restrict(self, sub: "Subspace", name: str | None = None) -> "LieAlgebra":
        """Structure constants of a subalgebra in the subspace's own basis."""
        if not is_subalgebra(self, sub):
            raise ContractError("subspace is not closed under the bracket")
        vecs = sub.vectors
        basis = sub.matrix
        br = {}
        for a, b in combinations(range(sub.dim), 2):
            coords = _coordinates(basis, self.bracket(vecs[a], vecs[b]))
            out = {k: x for k, x in enumerate(coords) if x}
            if out:
                br[(a, b)] = out
        return LieAlgebra(sub.dim, br, name=name, validate=False)

    # -- JSON -------------------------------------------------------------
    def to_json(self) -> dict:
        data = {
            "dim": self.dim,
            "brackets": [
                {"i": i + 1, "j": j + 1, "out": {str(k + 1): format_rational(v) for k, v in out.items()}}
                for (i, j), out in sorted(self.brackets.items())
            ],
        }
        if self.name:
            data["name"] = self.name
        return data

    @classmethod
    def from_json(cls, data: Mapping) -> "LieAlgebra":
        br: dict[tuple[int, int], dict[int, Fraction]] = {}
        for entry in data.get("brackets", []):
            i, j = int(entry["i"]) - 1, int(entry["j"]) - 1
            out = {int(k) - 1: to_rational(v) for k, v in entry["out"].items()}
            if i > j:
                i, j = j, i
                out = {k: -v for k, v in out.items()}
            slot = br.setdefault((i, j), {})
            for k, v in out.items():
                slot[k] = slot.get(k, Fraction(0)) + v
        return cls(int(data["dim"]), br, name=data.get("name"))


def _coordinates(basis: Matrix, v: Matrix) -> list[Fraction]:
    from .linalg import solve_linear

    x = solve_linear(basis, v)
    if x is None:
        raise ContractError("vector is not in the span of the basis")
    return x.flat()


def abelian(n: int, name: str | None = None) -> LieAlgebra:
    return LieAlgebra(n, {}, name=name or f"R{n}")


def from_bracket_relations(dim: int, relations: Mapping[tuple[int, int], Mapping[int, object]],
                           name: str | None = None) -> LieAlgebra:
    """Brackets written with 1-based labels, e.g. ``{(1, 2): {3: 1}}``."""
    br: dict[tuple[int, int], dict[int, Fraction]] = {}
    for (i, j), out in relations.items():
        i, j = i - 1, j - 1
        sign = 1
        if i > j:
            i, j, sign = j, i, -1
        slot = br.setdefault((i, j), {})
        for k, v in out.items():
            slot[k - 1] = slot.get(k - 1, Fraction(0)) + sign * to_rational(v)
    return LieAlgebra(dim, br, name=name)


# ---------------------------------------------------------------------------
# Salamon notation

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)\s*\*\s*)?(?P<idx>\d\d)(?!\d)")


def parse_salamon(text: str, name: str | None = None) -> LieAlgebra:
    """Parse ``(0,0,0,12,13+14,24)``-style notation.

    Entry k lists ``d e^k``; a term ``ij`` is ``e^i ^ e^j`` and a reversed
    pair such as ``42`` means ``-e^{24}``.  Optional rational coefficients
    are written ``2*12`` or ``1/2*13``.
    """
    s = text.replace("−", "-")
    pos = 0

    def skip_ws():
        nonlocal pos
        while pos < len(s) and s[pos].isspace():
            pos += 1

    skip_ws()
    if pos >= len(s) or s[pos] != "(":
        raise SalamonParseError("expected '('", pos, text)
    pos += 1
    entries: list[list[tuple[int, int, Fraction]]] = []
    while True:
        skip_ws()
        terms: list[tuple[int, int, Fraction]] = []
        if pos < len(s) and s[pos] == "0" and not (pos + 1 < len(s) and s[pos + 1].isdigit()):
            pos += 1
        else:
            sign = Fraction(1)
            if pos < len(s) and s[pos] in "+-":
                sign = Fraction(-1) if s[pos] == "-" else sign
                pos += 1
            while True:
                m = _TOKEN.match(s, pos)
                if not m:
                    raise SalamonParseError("expected a term like '12' or '2*13'", pos, text)
                coeff = Fraction(m.group("num")) if m.group("num") else Fraction(1)
                i, j = int(m.group("idx")[0]), int(m.group("idx")[1])
                if i == j or i == 0 or j == 0:
                    raise SalamonParseError(f"invalid index pair {i}{j}", m.start("idx"), text)
                terms.append((i, j, sign * coeff))
                pos = m.end()
                skip_ws()
                if pos < len(s) and s[pos] in "+-":
                    sign = Fraction(-1) if s[pos] == "-" else Fraction(1)
                    pos += 1
                    continue
                break
        entries.append(terms)
        skip_ws()
        if pos < len(s) and s[pos] == ",":
            pos += 1
            continue
        if pos < len(s) and s[pos] == ")":
            pos += 1
            break
        raise SalamonParseError("expected ',' or ')'", pos, text)
    skip_ws()
    if pos != len(s):
        raise SalamonParseError("trailing characters", pos, text)

    dim = len(entries)
    br: dict[tuple[int, int], dict[int, Fraction]] = {}
    for k, terms in enumerate(entries):
        for i, j, coeff in terms:
            if i > dim or j > dim:
                raise SalamonParseError(f"index {max(i, j)} exceeds dimension {dim}", 0, text)
            a, b = i - 1, j - 1
            if a > b:
                a, b, coeff = b, a, -coeff
            slot = br.setdefault((a, b), {})
            slot[k] = slot.get(k, Fraction(0)) + coeff
    return LieAlgebra(dim, br, name=name)


def print_salamon(lie: LieAlgebra) -> str:
    entries = []
    for k in range(lie.dim):
        parts = []
        for i, j in combinations(range(lie.dim), 2):
            v = lie.c(i, j, k)
            if v == 0:
                continue
            mag = abs(v)
            term = f"{i + 1}{j + 1}" if mag == 1 else f"{format_rational(mag)}*{i + 1}{j + 1}"
            if not parts:
                parts.append(term if v > 0 else "-" + term)
            else:
                parts.append(("+" if v > 0 else "-") + term)
        entries.append("".join(parts) if parts else "0")
    return "(" + ",".join(entries) + ")"


# ---------------------------------------------------------------------------
# structural queries

def jacobiator(lie: LieAlgebra, i: int, j: int, k: int) -> Matrix:
    b, bb = lie.bracket, lie.basis_bracket
    e = [_basis_vector(lie.dim, t) for t in (i, j, k)]
    return b(bb(i, j), e[2]) + b(bb(j, k), e[0]) + b(bb(k, i), e[1])


def check_jacobi(lie: LieAlgebra) -> tuple[bool, tuple[int, int, int] | None]:
    """Jacobi on all basis triples; returns the first failing triple."""
    for i, j, k in combinations(range(lie.dim), 3):
        if not jacobiator(lie, i, j, k).is_zero():
            return False, (i, j, k)
    return True, None


def _basis_vector(n: int, i: int) -> Matrix:
    return Matrix.column([1 if t == i else 0 for t in range(n)])


@dataclass(frozen=True)
class Subspace:
    ambient_dim: int
    vectors: tuple[Matrix, ...] = field(default_factory=tuple)

    def __post_init__(self):
        vecs = tuple(self.vectors)
        object.__setattr__(self, "vectors", vecs)
        if any(v.shape != (self.ambient_dim, 1) for v in vecs):
            raise ContractError("subspace vectors must be columns of the ambient dimension")
        if span_rank(vecs) != len(vecs):
            raise ContractError("subspace basis is linearly dependent")

    @classmethod
    def span(cls, ambient_dim: int, vectors: Sequence[Matrix]) -> "Subspace":
        """Subspace spanned by possibly dependent vectors."""
        if not vectors:
            return cls(ambient_dim, ())
        m = Matrix.from_columns(list(vectors))
        _, piv = m.rref()
        return cls(ambient_dim, tuple(vectors[p] for p in piv))

    @classmethod
    def coordinate(cls, ambient_dim: int, indices: Sequence[int]) -> "Subspace":
        return cls(ambient_dim, tuple(_basis_vector(ambient_dim, i) for i in indices))

    @property
    def dim(self) -> int:
        return len(self.vectors)

    @property
    def matrix(self) -> Matrix:
        return Matrix.from_columns(list(self.vectors), rows=self.ambient_dim)

    def contains(self, v: Matrix) -> bool:
        return in_span(v, self.vectors)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.vectors)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subspace) and self.dim == other.dim
                and self.contains_subspace(other))

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.dim))


def center(lie: LieAlgebra) -> Subspace:
    n = lie.dim
    stacked = Matrix([row for i in range(n) for row in lie.ad(i).entries()])
    return Subspace(n, tuple(kernel(stacked)))


def bracket_of_subspaces(lie: LieAlgebra, a: Subspace, b: Subspace) -> Subspace:
    vecs = [lie.bracket(x, y) for x in a.vectors for y in b.vectors]
    return Subspace.span(lie.dim, [v for v in vecs if not v.is_zero()])


def whole(lie: LieAlgebra) -> Subspace:
    return Subspace.coordinate(lie.dim, range(lie.dim))


def derived_algebra(lie: LieAlgebra) -> Subspace:
    g = whole(lie)
    return bracket_of_subspaces(lie, g, g)


def lower_central_series(lie: LieAlgebra) -> list[Subspace]:
    """g = g^1 ⊇ g^2 = [g, g] ⊇ ... until the terms stabilise."""
    g = whole(lie)
    series = [g]
    while True:
        nxt = bracket_of_subspaces(lie, g, series[-1])
        if nxt.dim == series[-1].dim:
            return series
        series.append(nxt)
        if nxt.dim == 0:
            return series


def nil_step(lie: LieAlgebra) -> int | None:
    """Nilpotency step, or None when the algebra is not nilpotent."""
    series = lower_central_series(lie)
    if series[-1].dim != 0:
        return None
    return len(series) - 1


def derivation_constraints(lie: LieAlgebra) -> Matrix:
    """Linear system in the entries d_ab (row-major) cutting out Der(g)."""
    n = lie.dim
    rows = []
    for i, j in combinations(range(n), 2):
        for k in range(n):
            row = [Fraction(0)] * (n * n)
            for m in range(n):
                cm = lie.c(i, j, m)
                if cm:
                    row[k * n + m] += cm
            for a in range(n):
                ca = lie.c(a, j, k)
                if ca:
                    row[a * n + i] -= ca
                cb = lie.c(i, a, k)
                if cb:
                    row[a * n + j] -= cb
            if any(row):
                rows.append(row)
    if not rows:
        return Matrix.zeros(0, n * n)
    return Matrix(rows)


def derivations(lie: LieAlgebra) -> list[Matrix]:
    n = lie.dim
    basis = kernel(derivation_constraints(lie))
    return [Matrix([v.flat()[r * n:(r + 1) * n] for r in range(n)]) for v in basis]


def dim_der(lie: LieAlgebra) -> int:
    n = lie.dim
    return n * n - derivation_constraints(lie).rank()


def is_derivation(lie: LieAlgebra, d: Matrix) -> bool:
    for i, j in combinations(range(lie.dim), 2):
        lhs = d @ lie.basis_bracket(i, j)
        rhs = lie.bracket(d.col(i), _basis_vector(lie.dim, j)) + lie.bracket(_basis_vector(lie.dim, i), d.col(j))
        if lhs != rhs:
            return False
    return True


def is_subalgebra(lie: LieAlgebra, sub: Subspace) -> bool:
    if sub.ambient_dim != lie.dim:
        raise ContractError("subspace lives in a different algebra")
    vecs = sub.vectors
    return all(sub.contains(lie.bracket(vecs[a], vecs[b]))
               for a, b in combinations(range(len(vecs)), 2))


def is_ideal(lie: LieAlgebra, sub: Subspace) -> bool:
    return all(sub.contains(lie.bracket(_basis_vector(lie.dim, i), v))
               for i in range(lie.dim) for v in sub.vectors)


def is_lie_homomorphism(source: LieAlgebra, target: LieAlgebra, phi: Matrix) -> bool:
    """``phi[x, y] == [phi x, phi y]`` on basis pairs."""
    for i, j in combinations(range(source.dim), 2):
        if phi @ source.basis_bracket(i, j) != target.bracket(phi.col(i), phi.col(j)):
            return False
    return True


def direct_sum(a: LieAlgebra, b: LieAlgebra, name: str | None = None) -> LieAlgebra:
    br: dict[tuple[int, int], dict[int, Fraction]] = {}
    for (i, j), out in a.brackets.items():
        br[(i, j)] = dict(out)
    s = a.dim
    for (i, j), out in b.brackets.items():
        br[(i + s, j + s)] = {k + s: v for k, v in out.items()}
    return LieAlgebra(a.dim + b.dim, br, name=name, validate=False)


def heisenberg3() -> LieAlgebra:
    return LieAlgebra(3, {(0, 1): {2: 1}}, name="heis3")


def basis_vector(n: int, i: int) -> Matrix:
    return _basis_vector(n, i)
