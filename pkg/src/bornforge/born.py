"""Born structures (g, h, ω) on Lie algebras and their verification."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable

from .exterior import KForm, ce_d
from .geometry import (
    BilinearForm,
    DegenerateFormError,
    levi_civita,
    nabla_parallel,
    nijenhuis_vanishes,
    recursion_operator,
)
from .lie import LieAlgebra, Subspace, is_lie_homomorphism, is_subalgebra
from .linalg import ContractError, Matrix, kernel, matrix_to_json, signature_of_symmetric, to_rational


class BornStructureError(ValueError):
    """A candidate fails one of the defining identities; ``identity`` names it."""

    def __init__(self, identity: str, detail: str = ""):
        self.identity = identity
        super().__init__(identity + (f": {detail}" if detail else ""))


@dataclass(frozen=True)
class HermitianBornData:
    """Pseudo-Kähler pair (h, J) plus complementary subspaces swapped by J."""

    algebra: LieAlgebra
    h: BilinearForm
    J: Matrix
    g_plus: Subspace
    g_minus: Subspace

    def to_json(self) -> dict:
        return {
            "type": "hermitian",
            "algebra": self.algebra.to_json(),
            "h": matrix_to_json(self.h.gram),
            "J": matrix_to_json(self.J),
            "g_plus": [[str(x) for x in v.flat()] for v in self.g_plus.vectors],
            "g_minus": [[str(x) for x in v.flat()] for v in self.g_minus.vectors],
        }

    @classmethod
    def from_json(cls, data: dict, algebra: LieAlgebra | None = None) -> "HermitianBornData":
        lie = algebra or LieAlgebra.from_json(data["algebra"])
        n = lie.dim
        return cls(
            lie,
            BilinearForm(Matrix(data["h"])),
            Matrix(data["J"]),
            Subspace(n, tuple(Matrix.column(v) for v in data["g_plus"])),
            Subspace(n, tuple(Matrix.column(v) for v in data["g_minus"])),
        )


@dataclass(frozen=True)
class BornStructure:
    algebra: LieAlgebra
    g: BilinearForm
    h: BilinearForm
    omega: BilinearForm
    A: Matrix
    B: Matrix
    J: Matrix
    g_plus: Subspace
    g_minus: Subspace

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def hermitian(self) -> HermitianBornData:
        return HermitianBornData(self.algebra, self.h, self.J, self.g_plus, self.g_minus)

    def omega_form(self) -> KForm:
        n = self.dim
        gram = self.omega.gram
        return KForm(2, n, {(i, j): gram[i, j] for i, j in combinations(range(n), 2)})

    def to_json(self) -> dict:
        return {
            "type": "forms",
            "algebra": self.algebra.to_json(),
            "g": matrix_to_json(self.g.gram),
            "h": matrix_to_json(self.h.gram),
            "omega": matrix_to_json(self.omega.gram),
        }


def eigenspace(m: Matrix, value) -> Subspace:
    n = m.rows
    return Subspace(n, tuple(kernel(m - Matrix.identity(n).scale(value))))


def validate_born(a: Matrix, b: Matrix, j: Matrix):
    n = a.rows
    one = Matrix.identity(n)
    checks = [
        ("A² ≠ Id", a @ a == one),
        ("B² ≠ Id", b @ b == one),
        ("J² ≠ −Id", j @ j == -one),
        ("AB ≠ −BA", (a @ b + b @ a).is_zero()),
        ("AJ ≠ −JA", (a @ j + j @ a).is_zero()),
        ("BJ ≠ −JB", (b @ j + j @ b).is_zero()),
        ("ABJ ≠ Id", a @ b @ j == one),
    ]
    for name, ok in checks:
        if not ok:
            raise BornStructureError(name)


def assemble_from_forms(lie: LieAlgebra, g: BilinearForm, h: BilinearForm,
                        omega: BilinearForm) -> BornStructure:
    n = lie.dim
    if any(f.dim != n for f in (g, h, omega)):
        raise ContractError("forms and algebra have different dimensions")
    for label, f in (("g", g), ("h", h), ("omega", omega)):
        if not f.is_nondegenerate():
            raise BornStructureError(f"{label} degenerate")
    if g.kind != "symmetric" or h.kind != "symmetric":
        raise BornStructureError("g and h must be symmetric")
    if omega.kind != "antisymmetric":
        raise BornStructureError("omega must be antisymmetric")
    a = recursion_operator(g, omega)
    b = recursion_operator(g, h)
    j = -recursion_operator(omega, h)
    validate_born(a, b, j)
    gp, gm = eigenspace(a, 1), eigenspace(a, -1)
    if gp.dim != gm.dim:
        raise BornStructureError("eigenspaces of A have different dimensions")
    return BornStructure(lie, g, h, omega, a, b, j, gp, gm)


def assemble_from_hermitian(data: HermitianBornData) -> BornStructure:
    lie, h, j = data.algebra, data.h, data.J
    n = lie.dim
    gp, gm = data.g_plus, data.g_minus
    if j @ j != -Matrix.identity(n):
        raise BornStructureError("J² ≠ −Id")
    if j.T @ h.gram @ j != h.gram:
        raise BornStructureError("h(J·,J·) ≠ h")
    frame_vectors = list(gp.vectors) + list(gm.vectors)
    if gp.dim + gm.dim != n or not Matrix.from_columns(frame_vectors).is_invertible():
        raise BornStructureError("not complementary")
    if any(h(x, y) != 0 for x in gp.vectors for y in gm.vectors):
        raise BornStructureError("not orthogonal")
    if not all(gm.contains(j @ v) for v in gp.vectors):
        raise BornStructureError("not interchanged by J")
    frame = Matrix.from_columns(frame_vectors)
    a = frame @ Matrix.diag([1] * gp.dim + [-1] * gm.dim) @ frame.inverse()
    omega = BilinearForm(j.T @ h.gram, "antisymmetric")
    g = BilinearForm(a.T @ omega.gram)
    born = assemble_from_forms(lie, g, h, omega)
    if born.A != a:
        raise BornStructureError("reconstructed A disagrees with the splitting")
    return born


# -- algebraic relations ------------------------------------------------------

# (form, operator) -> (sign of f(MX,MY) = s f(X,Y), sign of f(MX,Y) = s f(X,MY))
TABLE1_SIGNS = {
    ("g", "A"): (-1, -1), ("h", "A"): (1, 1), ("omega", "A"): (-1, -1),
    ("g", "B"): (1, 1), ("h", "B"): (1, 1), ("omega", "B"): (-1, -1),
    ("g", "J"): (-1, 1), ("h", "J"): (1, -1), ("omega", "J"): (1, -1),
}


def _sign(s: int) -> str:
    return "" if s > 0 else "-"


def check_table1(born: BornStructure) -> dict[str, bool]:
    """All 18 invariance relations of g, h, ω under A, B, J."""
    forms = {"g": born.g.gram, "h": born.h.gram, "omega": born.omega.gram}
    ops = {"A": born.A, "B": born.B, "J": born.J}
    report = {}
    for op in ("A", "B", "J"):
        for f in ("g", "h", "omega"):
            s1, s2 = TABLE1_SIGNS[(f, op)]
            gram, m = forms[f], ops[op]
            sym = "ω" if f == "omega" else f
            report[f"{sym}({op}X,{op}Y)={_sign(s1)}{sym}(X,Y)"] = m.T @ gram @ m == gram.scale(s1)
            report[f"{sym}({op}X,Y)={_sign(s2)}{sym}(X,{op}Y)"] = m.T @ gram == (gram @ m).scale(s2)
    return report


@dataclass(frozen=True)
class IntegrabilityReport:
    omega_closed: bool
    nijenhuis_zero: bool
    eigenspaces_subalgebras: bool
    nablaJ_zero: bool

    @property
    def verdict(self) -> bool:
        return self.omega_closed and self.nijenhuis_zero and self.eigenspaces_subalgebras

    @property
    def parallel_verdict(self) -> bool:
        return self.eigenspaces_subalgebras and self.nablaJ_zero

    @property
    def formulations_agree(self) -> bool:
        return self.verdict == self.parallel_verdict

    def as_dict(self) -> dict[str, bool]:
        return {
            "omega_closed": self.omega_closed,
            "nijenhuis_zero": self.nijenhuis_zero,
            "eigenspaces_subalgebras": self.eigenspaces_subalgebras,
            "nablaJ_zero": self.nablaJ_zero,
            "verdict": self.verdict,
        }


def check_integrable(born: BornStructure) -> IntegrabilityReport:
    lie = born.algebra
    closed = ce_d(lie, born.omega_form()).is_zero()
    nij = nijenhuis_vanishes(lie, born.J)
    subalg = is_subalgebra(lie, born.g_plus) and is_subalgebra(lie, born.g_minus)
    try:
        par = nabla_parallel(levi_civita(lie, born.h), born.J)
    except DegenerateFormError:
        par = False
    return IntegrabilityReport(closed, nij, subalg, par)


def eigenspace_lagrangian_report(born: BornStructure) -> dict:
    def restricted_zero(gram: Matrix, a: Subspace, b: Subspace) -> bool:
        return all((x.T @ gram @ y).is_zero() for x in a.vectors for y in b.vectors)

    gp, gm = born.g_plus, born.g_minus
    g_sig = signature_of_symmetric(born.g.gram)
    h_sig = signature_of_symmetric(born.h.gram)
    half = born.dim // 2
    return {
        "omega_lagrangian_plus": restricted_zero(born.omega.gram, gp, gp),
        "omega_lagrangian_minus": restricted_zero(born.omega.gram, gm, gm),
        "g_null_plus": restricted_zero(born.g.gram, gp, gp),
        "g_null_minus": restricted_zero(born.g.gram, gm, gm),
        "h_orthogonal": restricted_zero(born.h.gram, gp, gm),
        "g_neutral": g_sig.as_tuple() == (half, half, 0),
        "h_signature_even": h_sig.zero == 0 and h_sig.positive % 2 == 0 and h_sig.negative % 2 == 0,
        "g_signature": g_sig.as_tuple(),
        "h_signature": h_sig.as_tuple(),
    }


def rotate_product_structure(born: BornStructure, cos, sin) -> BornStructure:
    """Replace A by cos·A + sin·B, keeping (h, J)."""
    c, s = to_rational(cos), to_rational(sin)
    if c * c + s * s != 1:
        raise ContractError("cos² + sin² must equal 1")
    a_theta = born.A.scale(c) + born.B.scale(s)
    data = HermitianBornData(born.algebra, born.h, born.J, eigenspace(a_theta, 1), eigenspace(a_theta, -1))
    return assemble_from_hermitian(data)


def rational_circle_points(max_hypotenuse: int = 65) -> list[tuple[Fraction, Fraction]]:
    """(±1, 0), (0, ±1) and all Pythagorean (a/c, b/c) with c <= max_hypotenuse."""
    pts = {(Fraction(1), Fraction(0)), (Fraction(-1), Fraction(0)),
           (Fraction(0), Fraction(1)), (Fraction(0), Fraction(-1))}
    for cc in range(1, max_hypotenuse + 1):
        for a in range(1, cc):
            b2 = cc * cc - a * a
            b = int(round(b2 ** 0.5))
            if b > 0 and b * b == b2:
                for sa, sb in product((1, -1), repeat=2):
                    pts.add((Fraction(sa * a, cc), Fraction(sb * b, cc)))
    return sorted(pts)


def subalgebra_type(lie: LieAlgebra, sub: Subspace) -> str:
    """'abelian', 'heis3' or 'other' for a subalgebra of dimension three or less."""
    if not is_subalgebra(lie, sub):
        return "not a subalgebra"
    vecs = sub.vectors
    brackets = [lie.bracket(x, y) for x, y in combinations(vecs, 2)]
    if all(b.is_zero() for b in brackets):
        return "abelian"
    if sub.dim == 3:
        derived = Subspace.span(lie.dim, [b for b in brackets if not b.is_zero()])
        central = all(lie.bracket(d, v).is_zero() for d in derived.vectors for v in vecs)
        if derived.dim == 1 and central:
            return "heis3"
    return "other"


def rotation_sweep(born: BornStructure, points: Iterable[tuple[Fraction, Fraction]] | None = None):
    """Rotated structures whose eigenspaces are subalgebras, with their types."""
    out = []
    for c, s in points if points is not None else rational_circle_points():
        rotated = rotate_product_structure(born, c, s)
        lie = rotated.algebra
        if is_subalgebra(lie, rotated.g_plus) and is_subalgebra(lie, rotated.g_minus):
            out.append(((c, s), subalgebra_type(lie, rotated.g_plus),
                        subalgebra_type(lie, rotated.g_minus), rotated))
    return out


def check_equivalence(b1: BornStructure, b2: BornStructure, phi: Matrix) -> bool:
    """Φ: g1 -> g2 a Lie isomorphism with Φ*h2 = h1, Φ*g2 = g1, Φ*ω2 = ω1."""
    if phi.shape != (b2.dim, b1.dim) or not phi.is_invertible():
        raise ContractError("Φ must be an invertible linear map")
    if not is_lie_homomorphism(b1.algebra, b2.algebra, phi):
        return False
    return all(phi.T @ f2.gram @ phi == f1.gram
               for f1, f2 in ((b1.h, b2.h), (b1.g, b2.g), (b1.omega, b2.omega)))


def standard_abelian(n: int) -> BornStructure:
    """Flat Kähler structure on R^{2m} with g_+ = <e_1..e_m>, J e_i = e_{m+i}."""
    from .lie import abelian

    if n % 2:
        raise ContractError("Born structures need even dimension")
    m = n // 2
    j = Matrix.block([[Matrix.zeros(m), -Matrix.identity(m)], [Matrix.identity(m), Matrix.zeros(m)]])
    data = HermitianBornData(abelian(n), BilinearForm(Matrix.identity(n)), j,
                             Subspace.coordinate(n, range(m)), Subspace.coordinate(n, range(m, n)))
    return assemble_from_hermitian(data)
