"""Named Lie algebras, numerical fingerprints and identification."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Any

from .born import BornStructure, HermitianBornData, assemble_from_hermitian, standard_abelian
from .exterior import Nu2Unsupported, betti, nu2
from .geometry import BilinearForm, complex_structure
from .lie import (
    LieAlgebra,
    Subspace,
    bracket_of_subspaces,
    center,
    dim_der,
    nil_step,
    parse_salamon,
    whole,
)
from .linalg import Matrix, signature_of_symmetric


class CatalogConsistencyError(RuntimeError):
    pass


@dataclass(frozen=True)
class Fingerprint:
    """(step, b1, b2, b3, dim Der, dim center, ν²); step None = not nilpotent."""

    step: int | None
    b1: int
    b2: int
    b3: int
    dim_der: int
    dim_center: int
    nu2: int | None

    def as_tuple(self) -> tuple:
        return (self.step, self.b1, self.b2, self.b3, self.dim_der, self.dim_center, self.nu2)

    def as_dict(self) -> dict[str, Any]:
        keys = ("step", "b1", "b2", "b3", "dim_der", "dim_center", "nu2")
        return dict(zip(keys, self.as_tuple()))


@dataclass(frozen=True)
class ReducedFingerprint:
    """Low-dimensional variant: (kind, b1, b2, dim Der, dim center, Killing signature)."""

    kind: str
    b1: int
    b2: int
    dim_der: int
    dim_center: int
    killing: tuple[int, int, int]

    def as_tuple(self) -> tuple:
        return (self.kind, self.b1, self.b2, self.dim_der, self.dim_center, self.killing)


def derived_series_length(lie: LieAlgebra) -> int | None:
    """Solvability length, None if the derived series stabilises above zero."""
    cur = whole(lie)
    k = 0
    while cur.dim:
        nxt = bracket_of_subspaces(lie, cur, cur)
        if nxt.dim == cur.dim:
            return None
        cur, k = nxt, k + 1
    return k


def killing_form(lie: LieAlgebra) -> Matrix:
    ads = [lie.ad(i) for i in range(lie.dim)]
    return Matrix([[(a @ b).trace() for b in ads] for a in ads])


def fingerprint(lie: LieAlgebra) -> Fingerprint:
    try:
        n2 = nu2(lie)
    except Nu2Unsupported:
        n2 = None
    return Fingerprint(nil_step(lie), betti(lie, 1), betti(lie, 2), betti(lie, 3),
                       dim_der(lie), center(lie).dim, n2)


def reduced_fingerprint(lie: LieAlgebra) -> ReducedFingerprint:
    step = nil_step(lie)
    if step is not None:
        kind = f"nilpotent-{step}"
    elif derived_series_length(lie) is not None:
        kind = "solvable"
    else:
        kind = "non-solvable"
    return ReducedFingerprint(kind, betti(lie, 1), betti(lie, 2), dim_der(lie), center(lie).dim,
                              signature_of_symmetric(killing_form(lie)).as_tuple())


def fingerprint_for(lie: LieAlgebra):
    return fingerprint(lie) if lie.dim >= 6 else reduced_fingerprint(lie)


# -- catalog ----------------------------------------------------------------

@dataclass(frozen=True)
class CatalogEntry:
    name: str
    algebra: LieAlgebra
    salamon: str | None
    born_flag: bool
    stored_fingerprint: tuple | None = None
    born: HermitianBornData | None = None
    construction: dict | None = None
    source: str = ""
    notes: str = ""

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def born_model(self) -> BornStructure | None:
        """An explicit integrable Born structure on this algebra or on an isomorphic model.

        Low-dimensional entries carry structures on the catalog basis itself;
        six-dimensional ones are rebuilt from their bicross construction.
        """
        if self.born is not None:
            return assemble_from_hermitian(self.born)
        if self.construction is None:
            return None
        from .products import bicross, family_R3_R3, family_R3_heis3

        fam = self.construction["family"]
        if fam == "abelian":
            return standard_abelian(self.dim)
        if fam == "r3-heis3":
            c = self.construction
            data = family_R3_heis3(c["x"], c["y"], c.get("x0", 0), c.get("y0", 0))
        elif fam == "r3-r3":
            data = family_R3_R3()[self.construction["instance"]]
        else:
            raise CatalogConsistencyError(f"unknown construction family {fam!r}")
        return bicross(data).born


def _entry_from_json(raw: dict) -> CatalogEntry:
    name = raw["name"]
    dim = raw["dim"]
    if "salamon" in raw:
        lie = parse_salamon(raw["salamon"], name=name)
    else:
        lie = LieAlgebra.from_json({"dim": dim, "brackets": raw["brackets"], "name": name})
    if lie.dim != dim:
        raise CatalogConsistencyError(f"{name}: dimension mismatch")
    born = None
    if "born" in raw:
        b = raw["born"]
        j = complex_structure(dim, {int(k): {int(a): v for a, v in out.items()}
                                    for k, out in b["J"].items()})
        born = HermitianBornData(lie, BilinearForm(Matrix(b["h"])), j,
                                 Subspace.coordinate(dim, [i - 1 for i in b["g_plus"]]),
                                 Subspace.coordinate(dim, [i - 1 for i in b["g_minus"]]))
    fp = tuple(raw["fingerprint"]) if "fingerprint" in raw else None
    return CatalogEntry(name, lie, raw.get("salamon"), bool(raw.get("born_flag")), fp, born,
                        raw.get("construction"), raw.get("source", ""), raw.get("notes", ""))


def _load(name: str) -> dict:
    return json.loads(resources.files("bornforge.data").joinpath(name).read_text(encoding="utf-8"))


def catalog_json() -> dict:
    return _load("catalog.json")


@lru_cache(maxsize=None)
def expected() -> dict:
    return _load("expected.json")


@lru_cache(maxsize=None)
def catalog() -> tuple[CatalogEntry, ...]:
    return tuple(_entry_from_json(raw) for raw in catalog_json()["entries"])


def entry(name: str) -> CatalogEntry:
    for e in catalog():
        if e.name == name:
            return e
    raise KeyError(name)


@lru_cache(maxsize=None)
def _fingerprint_index() -> dict[int, list[tuple[tuple, str]]]:
    index: dict[int, list[tuple[tuple, str]]] = {}
    for e in catalog():
        fp = e.stored_fingerprint if e.stored_fingerprint is not None else \
            fingerprint_for(e.algebra).as_tuple()
        index.setdefault(e.dim, []).append((tuple(fp), e.name))
    return index


def identify(lie: LieAlgebra) -> str | None:
    """Unique catalog name with the same fingerprint, or None."""
    fp = fingerprint_for(lie).as_tuple()
    hits = [name for cand, name in _fingerprint_index().get(lie.dim, []) if cand == fp]
    if len(hits) > 1:
        raise CatalogConsistencyError(f"fingerprint {fp} matches {hits}")
    return hits[0] if hits else None


def identify_report(lie: LieAlgebra, pseudo_kahler: bool = False) -> dict:
    """Identification with its status.

    In dimension six a match is only decisive among nilpotent pseudo-Kähler
    algebras, where the fingerprints are known to separate the classes.
    """
    name = identify(lie)
    fp = fingerprint_for(lie)
    if name is None:
        status, text = "none", "no catalog match"
    elif lie.dim == 6 and pseudo_kahler and fp.step is not None:
        status, text = "identified", name
    else:
        status = "candidate"
        text = f"candidate: {name} (fingerprint match, isomorphism not certified)"
    return {"name": name, "status": status, "text": text, "fingerprint": list(fp.as_tuple())}


def self_test() -> list[str]:
    """Stored fingerprints equal recomputed ones and catalog fingerprints separate."""
    problems = []
    for e in catalog():
        if e.stored_fingerprint is not None:
            got = fingerprint(e.algebra).as_tuple()
            if got != e.stored_fingerprint:
                problems.append(f"{e.name}: stored {e.stored_fingerprint}, computed {got}")
    for dim, items in _fingerprint_index().items():
        seen: dict[tuple, str] = {}
        for fp, name in items:
            if fp in seen:
                problems.append(f"dim {dim}: {name} and {seen[fp]} share fingerprint {fp}")
            seen[fp] = name
    return problems
