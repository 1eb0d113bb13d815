"""Finitely presented modules, submodules given by generators, and maps.

A module is ``A^m / colspan(R)``; its elements are length-m columns.  A
submodule N is spanned by the columns of G, and a map f: N -> M is given by
the images of those generators (columns of F).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import DimensionMismatch, IllDefinedHom, RingMismatch
from .linsolve import MembershipWitness, kernel_gens, membership, solve
from .polymat import Matrix, hstack, identity
from .rings import Ring


@dataclass(frozen=True)
class ModulePresentation:
    ring: Ring
    ambient_rank: int
    relations: Matrix

    def __post_init__(self):
        R = self.relations
        if R.ring != self.ring:
            raise RingMismatch(f"relations over {R.ring}, module over {self.ring}")
        if R.rows != self.ambient_rank:
            raise DimensionMismatch(f"relations have {R.rows} rows, ambient rank is {self.ambient_rank}")

    @classmethod
    def free(cls, ring: Ring, m: int) -> ModulePresentation:
        return cls(ring, m, Matrix.zeros(ring, m, 0))

    @classmethod
    def from_relations(cls, ring: Ring, m: int, relation_columns: Sequence[Sequence]) -> ModulePresentation:
        return cls(ring, m, Matrix.from_columns(ring, relation_columns, m))

    def basis(self) -> Matrix:
        return identity(self.ring, self.ambient_rank)


@dataclass(frozen=True)
class SubmoduleGens:
    parent: ModulePresentation
    gens: Matrix

    def __post_init__(self):
        if self.gens.ring != self.parent.ring:
            raise RingMismatch("generators and module over different rings")
        if self.gens.rows != self.parent.ambient_rank:
            raise DimensionMismatch(f"generators have length {self.gens.rows}, "
                                    f"ambient rank is {self.parent.ambient_rank}")

    @property
    def ngens(self) -> int:
        return self.gens.cols

    @classmethod
    def whole(cls, M: ModulePresentation) -> SubmoduleGens:
        return cls(M, M.basis())


@dataclass(frozen=True)
class Hom:
    """f: N -> M with ``images`` column j = f(j-th generator of N)."""
    domain: SubmoduleGens
    codomain: ModulePresentation
    images: Matrix

    def __post_init__(self):
        if self.images.ring != self.codomain.ring or self.domain.parent.ring != self.codomain.ring:
            raise RingMismatch("hom data over different rings")
        if self.images.shape != (self.codomain.ambient_rank, self.domain.ngens):
            raise DimensionMismatch(f"images must be {self.codomain.ambient_rank}x{self.domain.ngens}, "
                                    f"got {self.images.rows}x{self.images.cols}")

    @property
    def ring(self) -> Ring:
        return self.codomain.ring

    def __call__(self, coords: Sequence) -> tuple:
        """Image of the element with coordinates ``coords`` in N's generators."""
        return self.images.apply([self.ring.canon(x) for x in coords])


def elem_eq(P: ModulePresentation, v: Sequence, w: Sequence) -> bool:
    if len(v) != P.ambient_rank or len(w) != P.ambient_rank:
        raise DimensionMismatch("elements must have length equal to the ambient rank")
    c = P.ring.canon
    diff = [c(c(a) - c(b)) for a, b in zip(v, w)]
    return membership(diff, Matrix.zeros(P.ring, P.ambient_rank, 0), P.relations) is not None


def is_zero_in(P: ModulePresentation, v: Sequence) -> Optional[MembershipWitness]:
    """Relation coefficients proving ``v == 0`` in P, or None."""
    return membership(v, Matrix.zeros(P.ring, P.ambient_rank, 0), P.relations)


def relative_kernel(F: Matrix, R: Matrix) -> Matrix:
    """Generators of {x : F x in colspan(R)}: kernel of [F | R], first block."""
    K = kernel_gens(hstack(F, R))
    cols = [c[:F.cols] for c in K.columns()]
    cols = [c for c in cols if any(c)]
    return Matrix.from_columns(F.ring, cols, F.cols)


def syzygies(N: SubmoduleGens) -> Matrix:
    return relative_kernel(N.gens, N.parent.relations)


def hom_is_well_defined(f: Hom) -> bool:
    for s in syzygies(f.domain).columns():
        if is_zero_in(f.codomain, f.images.apply(s)) is None:
            return False
    return True


def is_surjective(f: Hom) -> Optional[Matrix]:
    """k x m matrix whose column i holds coordinates of a preimage of e_i.

    Returns None if some basis class has no preimage.
    """
    if not hom_is_well_defined(f):
        raise IllDefinedHom("map does not respect the relations of its domain")
    w = surjectivity_witnesses(f)
    return w if isinstance(w, Matrix) else None


def surjectivity_witnesses(f: Hom):
    """Preimage coordinates for each e_i, or the first failing index (int)."""
    ring = f.ring
    m, k = f.codomain.ambient_rank, f.domain.ngens
    FR = hstack(f.images, f.codomain.relations)
    cols = []
    for i in range(m):
        e = [ring.one if r == i else ring.zero for r in range(m)]
        x = solve(FR, e)
        if x is None:
            return i
        cols.append(x[:k])
    return Matrix.from_columns(ring, cols, k)
