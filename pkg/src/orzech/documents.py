"""JSON documents for rings, matrices, modules and certificates.

Integers may appear as JSON numbers or decimal strings; rationals as
strings ``"p/q"``.  Module data lists *columns*; matrices inside
certificates use ``{"rows", "cols", "entries"}`` with row-major entries.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .errors import ParseError
from .engine import InjectivityCertificate
from .linsolve import MembershipWitness
from .modules import Hom, ModulePresentation, SubmoduleGens
from .polymat import Matrix, identity
from .rings import INTEGERS, MODN, QQ, ZZ, Ring, Zmod

_SAFE_INT = 2 ** 53


def parse_ring(obj) -> Ring:
    if obj == "Z":
        return ZZ
    if obj == "Q":
        return QQ
    if isinstance(obj, dict) and set(obj) == {"mod"}:
        n = parse_int(obj["mod"])
        if n < 2:
            raise ParseError(f"modulus must be >= 2, got {n}")
        return Zmod(n)
    raise ParseError(f"unknown ring {obj!r}; expected \"Z\", \"Q\" or {{\"mod\": n}}")


def dump_ring(ring: Ring):
    return {"mod": ring.modulus} if ring.kind == MODN else ring.kind


def parse_int(x) -> int:
    if isinstance(x, bool):
        raise ParseError(f"expected an integer, got {x!r}")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        try:
            return int(x.strip())
        except ValueError:
            pass
    raise ParseError(f"expected an integer, got {x!r}")


def parse_number(ring: Ring, x):
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise ParseError(f"expected an integer or a \"p/q\" string, got {x!r}")
    if isinstance(x, str):
        try:
            x = Fraction(x.strip())
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"malformed number {x!r}") from None
    if ring.kind == INTEGERS and isinstance(x, Fraction) and x.denominator != 1:
        raise ParseError(f"{x} is not an integer")
    if ring.kind == MODN and isinstance(x, Fraction) and x.denominator != 1:
        raise ParseError(f"{x} is not an integer residue")
    return ring.canon(x)


def dump_number(x):
    if isinstance(x, Fraction):
        return str(x)
    return x if -_SAFE_INT < x < _SAFE_INT else str(x)


def parse_vector(ring: Ring, obj) -> tuple:
    if not isinstance(obj, list):
        raise ParseError(f"expected a list of numbers, got {type(obj).__name__}")
    return tuple(parse_number(ring, x) for x in obj)


def dump_vector(v) -> list:
    return [dump_number(x) for x in v]


def parse_matrix(ring: Ring, obj) -> Matrix:
    """Either a list of rows or ``{"rows", "cols", "entries"}``."""
    if isinstance(obj, list):
        rows = [parse_vector(ring, r) for r in obj]
        return _build(ring, rows, len(rows), len(rows[0]) if rows else 0)
    if isinstance(obj, dict) and "entries" in obj:
        rows = [parse_vector(ring, r) for r in obj["entries"]]
        nr = parse_int(obj.get("rows", len(rows)))
        nc = parse_int(obj.get("cols", len(rows[0]) if rows else 0))
        return _build(ring, rows, nr, nc)
    raise ParseError("matrix must be a list of rows or {rows, cols, entries}")


def _build(ring, rows, nr, nc):
    if len(rows) != nr or any(len(r) != nc for r in rows):
        raise ParseError(f"matrix entries do not match the declared {nr}x{nc} shape")
    return Matrix(ring, nr, nc, tuple(rows))


def dump_matrix(M: Matrix) -> dict:
    return {"rows": M.rows, "cols": M.cols, "entries": [dump_vector(r) for r in M.data]}


def _columns(ring, obj, m, what) -> Matrix:
    if not isinstance(obj, list):
        raise ParseError(f"{what} must be a list of columns")
    cols = [parse_vector(ring, c) for c in obj]
    if any(len(c) != m for c in cols):
        raise ParseError(f"every column of {what} must have length {m}")
    return Matrix.from_columns(ring, cols, m)


def parse_module(ring: Ring, obj) -> Hom:
    """Presentation, submodule generators and images as a :class:`Hom`.

    Missing ``submodule_gens`` means N = M (identity generators); missing
    ``images`` means the inclusion N -> M.
    """
    if not isinstance(obj, dict) or "ambient_rank" not in obj:
        raise ParseError("module needs an \"ambient_rank\"")
    m = parse_int(obj["ambient_rank"])
    if m < 0:
        raise ParseError("ambient_rank must be non-negative")
    R = _columns(ring, obj.get("relations", []), m, "relations")
    P = ModulePresentation(ring, m, R)
    G = _columns(ring, obj["submodule_gens"], m, "submodule_gens") if "submodule_gens" in obj else identity(ring, m)
    F = _columns(ring, obj["images"], m, "images") if "images" in obj else G
    if F.cols != G.cols:
        raise ParseError(f"{G.cols} generators but {F.cols} images")
    return Hom(SubmoduleGens(P, G), P, F)


def dump_module(f: Hom) -> dict:
    return {
        "ambient_rank": f.codomain.ambient_rank,
        "relations": [dump_vector(c) for c in f.codomain.relations.columns()],
        "submodule_gens": [dump_vector(c) for c in f.domain.gens.columns()],
        "images": [dump_vector(c) for c in f.images.columns()],
    }


def dump_witness(w: MembershipWitness) -> dict:
    return {"coeffs": dump_vector(w.coeffs), "aux": dump_vector(w.aux)}


def parse_witness(ring, obj) -> MembershipWitness:
    if not isinstance(obj, dict):
        raise ParseError("witness must be an object with coeffs and aux")
    return MembershipWitness(parse_vector(ring, obj.get("coeffs", [])), parse_vector(ring, obj.get("aux", [])))


def dump_certificate(c: InjectivityCertificate) -> dict:
    return {
        "ch_coeffs": dump_vector(c.ch_coeffs),
        "lift_matrix": dump_matrix(c.lift_matrix),
        "pullback_witnesses": [dump_witness(w) for w in c.pullback_witnesses],
        "kernel_gens": dump_matrix(c.kernel_gens),
        "kernel_witnesses": [dump_witness(w) for w in c.kernel_witnesses],
        "invariance_witnesses": [[dump_witness(w) for w in row] for row in c.invariance_witnesses],
        "zero_witnesses": [dump_witness(w) for w in c.zero_witnesses],
    }


def parse_certificate(ring: Ring, obj) -> InjectivityCertificate:
    try:
        return InjectivityCertificate(
            ch_coeffs=parse_vector(ring, obj["ch_coeffs"]),
            lift_matrix=parse_matrix(ring, obj["lift_matrix"]),
            pullback_witnesses=tuple(parse_witness(ring, w) for w in obj["pullback_witnesses"]),
            kernel_gens=parse_matrix(ring, obj["kernel_gens"]),
            kernel_witnesses=tuple(parse_witness(ring, w) for w in obj["kernel_witnesses"]),
            invariance_witnesses=tuple(tuple(parse_witness(ring, w) for w in row)
                                       for row in obj["invariance_witnesses"]),
            zero_witnesses=tuple(parse_witness(ring, w) for w in obj["zero_witnesses"]),
        )
    except (KeyError, TypeError) as e:
        raise ParseError(f"malformed certificate: {e}") from None


def certificate_document(f: Hom, cert: InjectivityCertificate) -> dict:
    return {"ring": dump_ring(f.ring), "module": dump_module(f), "certificate": dump_certificate(cert)}


def loads(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"not valid JSON: {e}") from None
    if not isinstance(doc, dict) or "ring" not in doc:
        raise ParseError("document must be an object with a \"ring\" key")
    return doc


def _format(obj, indent=0) -> str:
    # objects one key per line, lists on a single line
    if isinstance(obj, dict) and any(isinstance(v, dict) for v in obj.values()):
        pad = " " * (indent + 2)
        items = [f"{pad}{json.dumps(k)}: {_format(v, indent + 2)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + " " * indent + "}"
    return json.dumps(obj, separators=(", ", ": "))


def dumps(doc: dict) -> str:
    return _format(doc) + "\n"


def document_matrix(doc: dict, ring: Ring) -> Matrix:
    if "matrix" in doc:
        return parse_matrix(ring, doc["matrix"])
    if "entries" in doc:
        return parse_matrix(ring, doc)
    raise ParseError("document has no \"matrix\"")


def document_module(doc: dict, ring: Ring) -> Hom:
    if "module" in doc:
        return parse_module(ring, doc["module"])
    if "ambient_rank" in doc:
        return parse_module(ring, doc)
    raise ParseError("document has no \"module\"")
