"""Injectivity certificates for surjections N -> M, and their verification.

Let N be spanned by the columns of G inside M = A^m / colspan(R) and let
f: N -> M send generator i to column i of F.  With p: A^k -> N the
coordinate map, the prover

1. picks h_i with (f o p)(h_i) = p(e_i), i.e. ``F h_i == G e_i`` mod R;
   the columns h_i form the lift matrix H, so f o p o g = p for g = H;
2. computes generators of V = Ker(f o p) = {x : F x in colspan(R)};
3. takes the monic annihilator c of H from its characteristic polynomial
   and, for u = 0..k, shows S_u(V) is inside V where
   S_u = c_u I + c_{u+1} H + ... + c_k H^(k-u);
4. reads off from S_{k-1} = c_{k-1} I + H that H v lies in V for every
   kernel generator v, hence p(v) = (f o p)(H v) = 0.

Every step is recorded as a membership witness, so the verifier only
multiplies matrices and compares.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional, Sequence

from .errors import (ChainFailure, DimensionMismatch, IllDefinedHom, InternalContradiction,
                     NotEndomorphism, NotInKernel, NotSurjective)
from .linsolve import MembershipWitness, check_witness, membership, solve
from .modules import (Hom, SubmoduleGens, elem_eq, hom_is_well_defined,
                      relative_kernel, surjectivity_witnesses)
from .polymat import (Matrix, Polynomial, eval_poly_at_matrix, hstack, identity, mat_add, mat_mul,
                      monic_annihilator, scalar_mul)


@dataclass(frozen=True)
class InjectivityCertificate:
    ch_coeffs: tuple
    lift_matrix: Matrix
    pullback_witnesses: tuple     # aux_i with F h_i + R aux_i = G e_i
    kernel_gens: Matrix
    kernel_witnesses: tuple       # aux_j with F v_j + R aux_j = 0
    invariance_witnesses: tuple   # [u][j]: coeffs w with V w = S_u v_j
    zero_witnesses: tuple         # aux_j with R aux_j = G v_j


@dataclass(frozen=True)
class VerificationResult:
    ok: bool
    reason: str = "ok"
    detail: str = ""

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class Reduction:
    """Outcome of restricting f to N' = A v + A g_1 + ... + A g_m."""
    hom: Hom
    certificate: InjectivityCertificate
    zero_witness: MembershipWitness  # R aux = G v, i.e. v = 0 in M


def _require_submodule(f: Hom):
    if f.domain.parent != f.codomain:
        raise DimensionMismatch("the domain must be a submodule of the codomain")


def _drop_zero_relations(w: MembershipWitness, R: Matrix) -> MembershipWitness:
    # coefficients on zero relation columns carry no information; pin them to 0
    zero_cols = {j for j in range(R.cols) if not any(R.col(j))}
    if not zero_cols:
        return w
    z = R.ring.zero
    return replace(w, aux=tuple(z if j in zero_cols else a for j, a in enumerate(w.aux)))


def build_pullback(f: Hom) -> tuple[Matrix, tuple]:
    """Lift matrix H (column i = h_i) and the relation witnesses for F H = G mod R."""
    F, G, R = f.images, f.domain.gens, f.codomain.relations
    FR = hstack(F, R)
    k = F.cols
    cols, wits = [], []
    for i in range(k):
        x = solve(FR, G.col(i))
        if x is None:
            raise NotSurjective(f"generator {i} of the domain has no preimage under f o p", index=i)
        cols.append(x[:k])
        wits.append(_drop_zero_relations(MembershipWitness((), tuple(x[k:])), R))
    return Matrix.from_columns(f.ring, cols, k), tuple(wits)


def compute_V(f: Hom) -> Matrix:
    return relative_kernel(f.images, f.codomain.relations)


def partial_sums(coeffs: Sequence, H: Matrix) -> list[Matrix]:
    """[S_0, ..., S_k] with S_k = c_k I and S_{u-1} = c_{u-1} I + H S_u."""
    k = H.rows
    I = identity(H.ring, k)
    S = [None] * (k + 1)
    S[k] = scalar_mul(coeffs[k], I)
    for u in range(k, 0, -1):
        S[u - 1] = mat_add(scalar_mul(coeffs[u - 1], I), mat_mul(H, S[u]))
    return S


def invariance_chain(H: Matrix, V: Matrix, coeffs: Optional[Sequence] = None) -> list[list[MembershipWitness]]:
    if not H.is_square or V.rows != H.rows:
        raise DimensionMismatch("H must be k x k and V must have k rows")
    if coeffs is None:
        coeffs = monic_annihilator(H)
    chain = []
    for u, S in enumerate(partial_sums(coeffs, H)):
        row = []
        for j, v in enumerate(V.columns()):
            w = membership(S.apply(v), V)
            if w is None:
                raise ChainFailure(u, j)
            row.append(w)
        chain.append(row)
    return chain


def _zero_witness(ring, c_prev, v, Y: Matrix, Z: Matrix, w, z) -> tuple:
    # G v = F H v + R Y v,  H v = V w - c v,  F V = -R Z,  F v = -R z
    # => G v = R (Y v - Z w + c z)
    Yv, Zw = Y.apply(v), Z.apply(w)
    return tuple(ring.canon(a - b + c_prev * d) for a, b, d in zip(Yv, Zw, z))


def orzech_certify(f: Hom) -> InjectivityCertificate:
    _require_submodule(f)
    if not hom_is_well_defined(f):
        raise IllDefinedHom("map does not respect the relations of its domain")
    ring = f.ring
    F, G, R = f.images, f.domain.gens, f.codomain.relations
    k, r = F.cols, R.cols

    wits = surjectivity_witnesses(f)
    if not isinstance(wits, Matrix):
        raise NotSurjective(f"basis element e_{wits} of the codomain has no preimage", index=wits)

    H, pullback = build_pullback(f)
    V = compute_V(f)
    kernel_wits = []
    for j, v in enumerate(V.columns()):
        zero = membership(F.apply(v), Matrix.zeros(ring, F.rows, 0), R)
        if zero is None:
            raise InternalContradiction(f"kernel generator {j} is not in Ker(f o p)")
        kernel_wits.append(_drop_zero_relations(MembershipWitness((), tuple(c for c in map(ring.neg, zero.aux))), R))

    coeffs = monic_annihilator(H)
    chain = invariance_chain(H, V, coeffs)

    Y = Matrix.from_columns(ring, [w.aux for w in pullback], r)
    Z = Matrix.from_columns(ring, [w.aux for w in kernel_wits], r)
    zeros = []
    for j, v in enumerate(V.columns()):
        if k == 0:
            break
        aux = _zero_witness(ring, coeffs[k - 1], v, Y, Z, chain[k - 1][j].coeffs, kernel_wits[j].aux)
        zw = MembershipWitness((), aux)
        if not check_witness(zw, G.apply(v), Matrix.zeros(ring, G.rows, 0), R):
            raise InternalContradiction(f"p(v_{j}) = 0 does not follow for kernel generator {j}")
        zeros.append(zw)

    return InjectivityCertificate(
        ch_coeffs=tuple(coeffs),
        lift_matrix=H,
        pullback_witnesses=pullback,
        kernel_gens=V,
        kernel_witnesses=tuple(kernel_wits),
        invariance_witnesses=tuple(tuple(row) for row in chain),
        zero_witnesses=tuple(zeros),
    )


def _fail(reason, detail=""):
    return VerificationResult(False, reason, detail)


def verify_certificate(f: Hom, cert: InjectivityCertificate) -> VerificationResult:
    """Check a certificate by re-multiplication only; never solves anything."""
    ring = f.ring
    F, G, R = f.images, f.domain.gens, f.codomain.relations
    m, k, r = F.rows, F.cols, R.cols
    H, V = cert.lift_matrix, cert.kernel_gens
    empty = Matrix.zeros(ring, m, 0)
    zero_cols = [j for j in range(r) if not any(R.col(j))]

    if f.domain.parent != f.codomain:
        return _fail("malformed", "domain is not a submodule of the codomain")
    if H.ring != ring or V.ring != ring or H.shape != (k, k) or V.rows != k:
        return _fail("malformed", "lift matrix or kernel generators have the wrong shape or ring")
    s = V.cols
    if (len(cert.ch_coeffs) != k + 1 or len(cert.pullback_witnesses) != k
            or len(cert.kernel_witnesses) != s or len(cert.invariance_witnesses) != k + 1
            or any(len(row) != s for row in cert.invariance_witnesses)
            or len(cert.zero_witnesses) != (s if k else 0)):
        return _fail("malformed", "witness counts do not match the dimensions")

    def canonical(values):
        try:
            return all(ring.canon(x) == x and type(ring.canon(x)) is type(x) for x in values)
        except (TypeError, ValueError):
            return False

    all_values = list(cert.ch_coeffs) + [x for row in H.data for x in row] + [x for row in V.data for x in row]
    for w in (*cert.pullback_witnesses, *cert.kernel_witnesses, *cert.zero_witnesses,
              *(w for row in cert.invariance_witnesses for w in row)):
        all_values += list(w.coeffs) + list(w.aux)
    if not canonical(all_values):
        return _fail("malformed", "entry not in canonical form")

    # (a) monic annihilator of H
    if cert.ch_coeffs[-1] != ring.one:
        return _fail("annihilator not monic")
    if not eval_poly_at_matrix(Polynomial(ring, cert.ch_coeffs), H).is_zero():
        return _fail("annihilator does not vanish", "sum c_t H^t != 0")

    def aux_ok(w):
        return not w.coeffs and all(w.aux[j] == 0 for j in zero_cols) if len(w.aux) == r else False

    # (b) f o p o g = p on the standard basis
    for i, w in enumerate(cert.pullback_witnesses):
        if not aux_ok(w) or not check_witness(MembershipWitness(H.col(i), w.aux), G.col(i), F, R):
            return _fail("witness re-multiplication failed", f"pullback identity at generator {i}")
    if any(not any(v) for v in V.columns()):
        return _fail("malformed", "zero kernel generator")
    # (c) kernel generators lie in Ker(f o p)
    zero = (ring.zero,) * m
    for j, (v, w) in enumerate(zip(V.columns(), cert.kernel_witnesses)):
        if not aux_ok(w) or not check_witness(MembershipWitness(v, w.aux), zero, F, R):
            return _fail("witness re-multiplication failed", f"kernel generator {j}")
    # (d) invariance chain S_u(V) inside V
    for u, (S, row) in enumerate(zip(partial_sums(cert.ch_coeffs, H), cert.invariance_witnesses)):
        for j, (v, w) in enumerate(zip(V.columns(), row)):
            if w.aux or not check_witness(w, S.apply(v), V):
                return _fail("witness re-multiplication failed", f"invariance chain at u={u}, generator {j}")
    # (e) p(v_j) = 0 in M
    for j, (v, w) in enumerate(zip(V.columns(), cert.zero_witnesses)):
        if not aux_ok(w) or not check_witness(w, G.apply(v), empty, R):
            return _fail("witness re-multiplication failed", f"zero witness for generator {j}")
    return VerificationResult(True)


def reduce_to_fingen(f: Hom, v_coords: Sequence) -> Reduction:
    """Certify f restricted to A v + A g_1 + ... + A g_m and show v = 0.

    ``v_coords`` are coordinates of v in N's generators; f(v) must vanish.
    """
    _require_submodule(f)
    ring = f.ring
    F, G, R = f.images, f.domain.gens, f.codomain.relations
    v_coords = tuple(ring.canon(x) for x in v_coords)
    if len(v_coords) != F.cols:
        raise DimensionMismatch(f"v needs {F.cols} coordinates, got {len(v_coords)}")
    if not elem_eq(f.codomain, F.apply(v_coords), (ring.zero,) * F.rows):
        raise NotInKernel("f(v) != 0")
    if not hom_is_well_defined(f):
        raise IllDefinedHom("map does not respect the relations of its domain")
    wits = surjectivity_witnesses(f)
    if not isinstance(wits, Matrix):
        raise NotSurjective(f"basis element e_{wits} of the codomain has no preimage", index=wits)

    coords = hstack(Matrix.column(ring, v_coords), wits)  # N' generators in N's coordinates
    sub = SubmoduleGens(f.codomain, mat_mul(G, coords))
    restricted = Hom(sub, f.codomain, mat_mul(F, coords))
    cert = orzech_certify(restricted)

    e1 = [ring.one] + [ring.zero] * (coords.cols - 1)
    w = membership(e1, cert.kernel_gens)
    if w is None:
        raise InternalContradiction("v is not in the kernel of the restricted map")
    A = Matrix.from_columns(ring, [z.aux for z in cert.zero_witnesses], R.cols)
    zw = MembershipWitness((), A.apply(w.coeffs) if cert.zero_witnesses else (ring.zero,) * R.cols)
    if not check_witness(zw, G.apply(v_coords), Matrix.zeros(ring, G.rows, 0), R):
        raise InternalContradiction("could not derive v = 0 from the restricted certificate")
    return Reduction(restricted, cert, zw)


def inverse_hom(f: Hom) -> Hom:
    """Two-sided inverse of a surjective endomorphism of M."""
    M = f.codomain
    G = f.domain.gens
    if f.domain.parent != M or G.cols != M.ambient_rank or not all(
            elem_eq(M, G.col(i), M.basis().col(i)) for i in range(G.cols)):
        raise NotEndomorphism("domain generators must be the basis of the codomain")
    orzech_certify(f)
    X = surjectivity_witnesses(f)
    if not isinstance(X, Matrix):
        raise NotSurjective(f"basis element e_{X} has no preimage", index=X)
    inv = Hom(SubmoduleGens.whole(M), M, mat_mul(G, X))
    if not is_two_sided_inverse(f, inv):
        raise InternalContradiction("constructed inverse fails the composition check")
    if not hom_is_well_defined(inv):
        raise InternalContradiction("constructed inverse is not well defined")
    return inv


def is_two_sided_inverse(f: Hom, g: Hom) -> bool:
    """Check f o g and g o f are the identity of M on generators, modulo relations.

    ``f`` has domain generators G equal to the basis of M mod R, ``g`` has
    the identity as domain generators.
    """
    M = f.codomain
    m = M.ambient_rank
    E = M.basis()
    for i in range(m):
        # g(e_i) is an ambient column, i.e. coordinates in g's (basis) generators;
        # over f's generators G it has the same class since G = I mod R
        if not elem_eq(M, f.images.apply(g.images.col(i)), E.col(i)):
            return False
        if not elem_eq(M, g.images.apply(f.images.col(i)), E.col(i)):
            return False
    return True
