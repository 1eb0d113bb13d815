"""Random module instances and certificate perturbations for the engine tests."""
from __future__ import annotations

import random
from dataclasses import dataclass, replace
from math import gcd

from orzech.modules import Hom, ModulePresentation, SubmoduleGens
from orzech.polymat import Matrix, identity
from orzech.rings import ZZ, Zmod

from oracles import FiniteModule, matmul, random_matrix, random_unimodular


@dataclass
class Instance:
    hom: Hom
    finite: FiniteModule
    F_cols: list


def _divisor_chain(rng, m, bound):
    while True:
        d = [rng.randint(1, 8)]
        for _ in range(m - 1):
            d.append(d[-1] * rng.randint(1, 4))
        size = 1
        for x in d:
            size *= x
        if 2 <= size <= bound:
            return d


def random_z_endomorphism(rng: random.Random) -> Instance:
    """Endomorphism of a finite Z-module Z^m / colspan(R), |M| <= 64.

    R = P diag(d) Q and F = P E P^-1 with d_i | E_ij d_j, so F respects R.
    """
    m = rng.choice([1, 1, 2, 2, 2, 3])
    d = _divisor_chain(rng, m, 64 if m < 3 else 12)
    P, Pi = random_unimodular(rng, m)
    Q, _ = random_unimodular(rng, m)
    D = [[d[i] * (i == j) for j in range(m)] for i in range(m)]
    R = matmul(matmul(P, D), Q)
    E = [[(d[i] // gcd(d[i], d[j])) * rng.randint(-3, 3) for j in range(m)] for i in range(m)]
    for i in range(m):
        if rng.random() < 0.6:
            E[i][i] = rng.choice([1, -1, 2, 3, 5, 7])
    F = matmul(matmul(P, E), Pi)
    size = 1
    for x in d:
        size *= x
    R_cols = [list(c) for c in zip(*R)]
    F_cols = [list(c) for c in zip(*F)]
    Mp = ModulePresentation.from_relations(ZZ, m, R_cols)
    hom = Hom(SubmoduleGens.whole(Mp), Mp, Matrix.from_columns(ZZ, F_cols, m))
    return Instance(hom, FiniteModule(m, R_cols, size), F_cols)


def random_modn_hom(rng: random.Random, endo=True) -> Instance:
    """A well-defined map into (Z/n)^m / colspan(R); rejection-sampled."""
    from orzech.modules import hom_is_well_defined
    while True:
        n = rng.choice([4, 6, 8, 9, 12])
        R = Zmod(n)
        m = rng.randint(1, 2)
        rel = [[rng.randrange(n) for _ in range(m)] for _ in range(rng.randint(0, 2))]
        k = m if endo else rng.randint(m, m + 1)
        G = identity(R, m) if endo else Matrix.from_rows(R, random_matrix(rng, R, m, k), k)
        F_cols = [[rng.randrange(n) for _ in range(m)] for _ in range(k)]
        P = ModulePresentation.from_relations(R, m, rel)
        hom = Hom(SubmoduleGens(P, G), P, Matrix.from_columns(R, F_cols, m))
        fm = FiniteModule(m, rel, n)
        if fm.size > 64 or fm.size < 2 or not hom_is_well_defined(hom):
            continue
        return Instance(hom, fm, F_cols)


def has_invisible_generator(hom: Hom) -> bool:
    """A generator that is literally zero with a literally zero image."""
    G, F = hom.domain.gens, hom.images
    return any(not any(G.col(i)) and not any(F.col(i)) for i in range(G.cols))


def perturbations(cert, ring):
    """Yield (label, certificate) for every single-entry +1 perturbation."""
    def bump(x):
        return ring.canon(x + ring.one)

    for i in range(len(cert.ch_coeffs)):
        v = list(cert.ch_coeffs)
        v[i] = bump(v[i])
        yield f"ch_coeffs[{i}]", replace(cert, ch_coeffs=tuple(v))
    for name in ("lift_matrix", "kernel_gens"):
        M = getattr(cert, name)
        for i in range(M.rows):
            for j in range(M.cols):
                d = [list(r) for r in M.data]
                d[i][j] = bump(d[i][j])
                yield f"{name}[{i},{j}]", replace(cert, **{name: Matrix(ring, M.rows, M.cols, tuple(map(tuple, d)))})

    def bumped(w):
        for fld in ("coeffs", "aux"):
            vals = getattr(w, fld)
            for t in range(len(vals)):
                v = list(vals)
                v[t] = bump(v[t])
                yield f"{fld}[{t}]", replace(w, **{fld: tuple(v)})

    for name in ("pullback_witnesses", "kernel_witnesses", "zero_witnesses"):
        seq = getattr(cert, name)
        for a, w in enumerate(seq):
            for tag, w2 in bumped(w):
                new = list(seq)
                new[a] = w2
                yield f"{name}[{a}].{tag}", replace(cert, **{name: tuple(new)})
    for u, row in enumerate(cert.invariance_witnesses):
        for a, w in enumerate(row):
            for tag, w2 in bumped(w):
                rows = [list(r) for r in cert.invariance_witnesses]
                rows[u][a] = w2
                yield f"invariance_witnesses[{u}][{a}].{tag}", replace(
                    cert, invariance_witnesses=tuple(map(tuple, rows)))


def enumerated_bijective(inst: Instance) -> bool:
    from oracles import induced_map_table
    table = induced_map_table(inst.finite, inst.F_cols)
    assert table is not None, "generator produced an ill-defined map"
    return len(set(table.values())) == inst.finite.size
