"""Left-invariant metrics, connections and curvature on Lie algebras.

Curvature convention: ``R(X,Y) = [∇_X, ∇_Y] - ∇_[X,Y]`` and
``ric(X,Y) = tr(Z -> R(Z,X)Y)``.  With these signs the product metric on
``aff(R) + R^2`` has Ricci endomorphism ``diag(-1,-1,0,0)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from .lie import LieAlgebra, basis_vector, derivations, is_derivation
from .linalg import (
    ContractError,
    Matrix,
    format_rational,
    matrix_to_json,
    signature_of_symmetric,
    solve_linear,
    to_rational,
)


class DegenerateFormError(ValueError):
    pass


@dataclass(frozen=True)
class BilinearForm:
    gram: Matrix
    kind: str = "symmetric"

    def __post_init__(self):
        if not self.gram.is_square():
            raise ContractError("Gram matrix must be square")
        if self.kind == "symmetric" and not self.gram.is_symmetric():
            raise ContractError("Gram matrix is not symmetric")
        if self.kind == "antisymmetric" and not self.gram.is_antisymmetric():
            raise ContractError("Gram matrix is not antisymmetric")
        if self.kind not in ("symmetric", "antisymmetric"):
            raise ContractError(f"unknown kind {self.kind!r}")

    @property
    def dim(self) -> int:
        return self.gram.rows

    def __call__(self, x: Matrix, y: Matrix) -> Fraction:
        return (x.T @ self.gram @ y)[0, 0]

    def is_nondegenerate(self) -> bool:
        return self.gram.det() != 0

    def signature(self):
        return signature_of_symmetric(self.gram)

    def pullback(self, p: Matrix) -> "BilinearForm":
        return BilinearForm(p.T @ self.gram @ p, self.kind)


def symmetric_form(n: int, squares: Mapping[int, object] | None = None,
                   odot: Mapping[tuple[int, int], object] | None = None) -> BilinearForm:
    """``sum c_i e^i⊗e^i + sum c_ij e^i⊙e^j`` with 1-based labels."""
    g = [[Fraction(0)] * n for _ in range(n)]
    for i, c in (squares or {}).items():
        g[i - 1][i - 1] += to_rational(c)
    for (i, j), c in (odot or {}).items():
        c = to_rational(c)
        g[i - 1][j - 1] += c
        g[j - 1][i - 1] += c
    return BilinearForm(Matrix(g))


def complex_structure(n: int, images: Mapping[int, Mapping[int, object]]) -> Matrix:
    """Complete ``J e_i = w_i`` (1-based) to an endomorphism with J^2 = -Id."""
    vs, ws = [], []
    for i, out in images.items():
        vs.append(basis_vector(n, i - 1))
        w = [Fraction(0)] * n
        for k, c in out.items():
            w[k - 1] = to_rational(c)
        ws.append(Matrix.column(w))
    frame = Matrix.from_columns(vs + ws)
    if frame.rows != frame.cols or not frame.is_invertible():
        raise ContractError("given images do not determine a complex structure")
    target = Matrix.from_columns(ws + [-v for v in vs])
    return target @ frame.inverse()


def _nondegenerate(gram: Matrix, what: str) -> Matrix:
    if gram.det() == 0:
        raise DegenerateFormError(what)
    return gram.inverse()


def _gram(form) -> Matrix:
    return form.gram if isinstance(form, BilinearForm) else form


def recursion_operator(a, b) -> Matrix:
    """The endomorphism R with a(R x, y) = b(x, y)."""
    ga, gb = _gram(a), _gram(b)
    if ga.shape != gb.shape:
        raise ContractError("forms live on different spaces")
    inv_t = _nondegenerate(ga.T, "recursion base degenerate")
    return inv_t @ gb.T


def adjoint(f: Matrix, h) -> Matrix:
    """f* with h(f x, y) = h(x, f* y)."""
    g = _gram(h)
    return _nondegenerate(g, "adjoint needs a nondegenerate metric") @ f.T @ g


def sym_part(f: Matrix, h) -> Matrix:
    return (f + adjoint(f, h)).scale(Fraction(1, 2))


def antisym_part(f: Matrix, h) -> Matrix:
    return (f - adjoint(f, h)).scale(Fraction(1, 2))


@dataclass(frozen=True)
class Connection:
    """Left-invariant connection; ``gamma[i]`` is the matrix of ∇_{e_i}."""

    algebra: LieAlgebra
    gamma: tuple[Matrix, ...]

    def nabla(self, x: Matrix, y: Matrix) -> Matrix:
        out = Matrix.zeros(self.algebra.dim, 1)
        for i, xi in enumerate(x.flat()):
            if xi:
                out = out + (self.gamma[i] @ y).scale(xi)
        return out

    def operator(self, x: Matrix) -> Matrix:
        out = Matrix.zeros(self.algebra.dim)
        for i, xi in enumerate(x.flat()):
            if xi:
                out = out + self.gamma[i].scale(xi)
        return out

    def is_torsion_free(self) -> bool:
        lie = self.algebra
        for i, j in combinations(range(lie.dim), 2):
            if self.gamma[i].col(j) - self.gamma[j].col(i) != lie.basis_bracket(i, j):
                return False
        return True

    def is_metric(self, h) -> bool:
        g = _gram(h)
        # h(∇_X Y, Z) + h(Y, ∇_X Z) = 0  <=>  Γ^T G + G Γ = 0
        return all((gm.T @ g + g @ gm).is_zero() for gm in self.gamma)


def levi_civita(lie: LieAlgebra, h) -> Connection:
    """Koszul formula 2h(∇_u v, w) = h([u,v],w) - h(v,[u,w]) - h(u,[v,w])."""
    g = _gram(h)
    ginv = _nondegenerate(g, "Levi-Civita connection needs a nondegenerate metric")
    n = lie.dim
    # hb[u][v] = row vector h([u, v], .)
    br = [[lie.basis_bracket(u, v) for v in range(n)] for u in range(n)]
    hb = [[(b.T @ g).flat() for b in row] for row in br]
    half = Fraction(1, 2)
    gammas = []
    for u in range(n):
        cols = []
        for v in range(n):
            k = [half * (hb[u][v][w] - hb[u][w][v] - hb[v][w][u]) for w in range(n)]
            cols.append(ginv @ Matrix.column(k))
        gammas.append(Matrix.from_columns(cols))
    return Connection(lie, tuple(gammas))


def curvature(conn: Connection) -> list[list[Matrix]]:
    """``R[i][j]`` is the matrix of R(e_i, e_j)."""
    lie = conn.algebra
    n = lie.dim
    gam = conn.gamma
    out = [[Matrix.zeros(n)] * n for _ in range(n)]
    for i, j in combinations(range(n), 2):
        r = gam[i] @ gam[j] - gam[j] @ gam[i]
        for k in range(n):
            c = lie.c(i, j, k)
            if c:
                r = r - gam[k].scale(c)
        out[i][j] = r
        out[j][i] = -r
    return out


def curvature_is_zero(r: list[list[Matrix]]) -> bool:
    return all(m.is_zero() for row in r for m in row)


def ricci_from_curvature(r: list[list[Matrix]]) -> Matrix:
    n = len(r)
    ric = [[sum((r[z][a][z, b] for z in range(n)), Fraction(0)) for b in range(n)] for a in range(n)]
    return Matrix(ric)


def ricci(lie: LieAlgebra, h) -> BilinearForm:
    return BilinearForm(ricci_from_curvature(curvature(levi_civita(lie, h))))


def ricci_endomorphism(lie: LieAlgebra, h) -> Matrix:
    g = _gram(h)
    return _nondegenerate(g, "degenerate metric") @ ricci(lie, h).gram


def is_flat(lie: LieAlgebra, h) -> bool:
    return curvature_is_zero(curvature(levi_civita(lie, h)))


def is_einstein(lie: LieAlgebra, h) -> Fraction | None:
    """The Einstein constant λ if ric = λ·Id (λ = 0 included), else None."""
    ric = ricci_endomorphism(lie, h)
    lam = ric[0, 0]
    if ric == Matrix.identity(lie.dim).scale(lam):
        return lam
    return None


@dataclass(frozen=True)
class Soliton:
    lam: Fraction
    derivation: Matrix
    unique: bool

    def to_json(self) -> dict:
        return {"lambda": format_rational(self.lam), "D": matrix_to_json(self.derivation),
                "unique": self.unique}


def is_ricci_soliton(lie: LieAlgebra, h) -> Soliton | None:
    """Solve ric = λ·Id + D with D ∈ Der(g); free parameters are set to zero."""
    n = lie.dim
    ric = ricci_endomorphism(lie, h)
    ders = derivations(lie)
    unknowns = [Matrix.identity(n)] + ders
    a = Matrix.from_columns([Matrix.column(u.flat()) for u in unknowns])
    b = Matrix.column(ric.flat())
    sol = solve_linear(a, b)
    if sol is None:
        return None
    lam = sol[0, 0]
    d = ric - Matrix.identity(n).scale(lam)
    # λ is pinned down unless Id itself is a derivation
    unique = not is_derivation(lie, Matrix.identity(n))
    return Soliton(lam, d, unique)


def classify_metric(lie: LieAlgebra, h) -> str:
    """One of "Flat", "Einstein", "Ricci soliton", "Non-flat"."""
    if is_flat(lie, h):
        return "Flat"
    if is_einstein(lie, h) is not None:
        return "Einstein"
    if is_ricci_soliton(lie, h) is not None:
        return "Ricci soliton"
    return "Non-flat"


def curvature_report(lie: LieAlgebra, h) -> dict:
    einstein = is_einstein(lie, h)
    soliton = is_ricci_soliton(lie, h)
    return {
        "flat": is_flat(lie, h),
        "einstein": None if einstein is None else format_rational(einstein),
        "soliton": None if soliton is None else soliton.to_json(),
    }


def nabla_parallel(conn: Connection, f: Matrix) -> bool:
    """∇f = 0, i.e. f commutes with every ∇_{e_i}."""
    if f.shape != (conn.algebra.dim, conn.algebra.dim):
        raise ContractError("endomorphism has the wrong size")
    return all(gm.commutator(f).is_zero() for gm in conn.gamma)


class NotAlmostComplexError(ValueError):
    pass


def nijenhuis(lie: LieAlgebra, j: Matrix) -> list[list[Matrix]]:
    """N_J(e_a, e_b) = [Ja, Jb] - J[Ja, b] - J[a, Jb] - [a, b]."""
    n = lie.dim
    if j @ j != -Matrix.identity(n):
        raise NotAlmostComplexError("not an almost complex structure")
    e = [basis_vector(n, i) for i in range(n)]
    je = [j.col(i) for i in range(n)]
    out = [[Matrix.zeros(n, 1)] * n for _ in range(n)]
    for a, b in combinations(range(n), 2):
        val = (lie.bracket(je[a], je[b]) - j @ lie.bracket(je[a], e[b])
               - j @ lie.bracket(e[a], je[b]) - lie.basis_bracket(a, b))
        out[a][b] = val
        out[b][a] = -val
    return out


def nijenhuis_vanishes(lie: LieAlgebra, j: Matrix) -> bool:
    return all(v.is_zero() for row in nijenhuis(lie, j) for v in row)


def is_representation(source: LieAlgebra, images: Sequence[Matrix]) -> bool:
    """ρ([e_i, e_j]) = [ρ(e_i), ρ(e_j)] on basis pairs."""
    for i, j in combinations(range(source.dim), 2):
        lhs = Matrix.zeros(images[0].rows)
        for k in range(source.dim):
            c = source.c(i, j, k)
            if c:
                lhs = lhs + images[k].scale(c)
        if lhs != images[i].commutator(images[j]):
            return False
    return True


def first_bianchi_holds(conn: Connection) -> bool:
    r = curvature(conn)
    n = conn.algebra.dim
    for x in range(n):
        for y in range(n):
            for z in range(n):
                s = r[x][y].col(z) + r[y][z].col(x) + r[z][x].col(y)
                if not s.is_zero():
                    return False
    return True
