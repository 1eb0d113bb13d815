"""``orzech`` command line.

Exit codes: 0 success/verified, 1 verification failed (or no solution),
2 input error, 3 map not surjective.
"""
from __future__ import annotations

import argparse
import random
import sys

from . import documents as doc_io
from .engine import inverse_hom, orzech_certify, reduce_to_fingen, verify_certificate
from .errors import (DimensionMismatch, IllDefinedHom, InternalContradiction, NotEndomorphism, NotInKernel,
                     NotSurjective, OrzechError, ParseError, RingMismatch, UnsupportedRing)
from .linsolve import hnf, kernel_gens, snf, solve
from .polymat import cayley_hamilton_check, charpoly, determinant

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_NOT_SURJECTIVE = 0, 1, 2, 3

COMMANDS = ("charpoly", "ch-check", "det", "hnf", "snf", "solve", "kernel",
            "certify", "verify", "invert", "reduce")


class Failed(Exception):
    """Computation ran but the answer is negative; carries the output document."""

    def __init__(self, message, out):
        super().__init__(message)
        self.out = out


def _charpoly(doc, ring):
    return {"ring": doc_io.dump_ring(ring),
            "charpoly": doc_io.dump_vector(charpoly(doc_io.document_matrix(doc, ring)).coeffs)}


def _ch_check(doc, ring):
    ok = cayley_hamilton_check(doc_io.document_matrix(doc, ring))
    out = {"cayley_hamilton": ok}
    if not ok:
        raise Failed("chi_M(M) is not zero", out)
    return out


def _det(doc, ring):
    return {"ring": doc_io.dump_ring(ring),
            "determinant": doc_io.dump_number(determinant(doc_io.document_matrix(doc, ring)).value)}


def _hnf(doc, ring):
    r = hnf(doc_io.document_matrix(doc, ring))
    return {"ring": doc_io.dump_ring(ring), "H": doc_io.dump_matrix(r.H), "U": doc_io.dump_matrix(r.U)}


def _snf(doc, ring):
    r = snf(doc_io.document_matrix(doc, ring))
    return {"ring": doc_io.dump_ring(ring), "S": doc_io.dump_matrix(r.S),
            "U": doc_io.dump_matrix(r.U), "V": doc_io.dump_matrix(r.V),
            "invariant_factors": doc_io.dump_vector(r.diagonal)}


def _solve(doc, ring):
    if "vector" not in doc:
        raise ParseError("solve needs a \"vector\"")
    x = solve(doc_io.document_matrix(doc, ring), doc_io.parse_vector(ring, doc["vector"]))
    out = {"ring": doc_io.dump_ring(ring), "solution": None if x is None else doc_io.dump_vector(x)}
    if x is None:
        raise Failed("system has no solution", out)
    return out


def _kernel(doc, ring):
    K = kernel_gens(doc_io.document_matrix(doc, ring))
    return {"ring": doc_io.dump_ring(ring), "kernel": [doc_io.dump_vector(c) for c in K.columns()]}


def _certify(doc, ring):
    f = doc_io.document_module(doc, ring)
    return doc_io.certificate_document(f, orzech_certify(f))


def _verify(doc, ring):
    f = doc_io.document_module(doc, ring)
    if "certificate" not in doc:
        raise ParseError("verify needs a \"certificate\"")
    res = verify_certificate(f, doc_io.parse_certificate(ring, doc["certificate"]))
    out = {"verified": res.ok, "reason": res.reason, "detail": res.detail}
    if not res.ok:
        raise Failed(f"{res.reason}" + (f" ({res.detail})" if res.detail else ""), out)
    return out


def _invert(doc, ring):
    inv = inverse_hom(doc_io.document_module(doc, ring))
    return {"ring": doc_io.dump_ring(ring), "module": doc_io.dump_module(inv)}


def _reduce(doc, ring):
    if "vector" not in doc:
        raise ParseError("reduce needs a \"vector\" with v's coordinates")
    f = doc_io.document_module(doc, ring)
    red = reduce_to_fingen(f, doc_io.parse_vector(ring, doc["vector"]))
    out = doc_io.certificate_document(red.hom, red.certificate)
    out["zero_witness"] = doc_io.dump_witness(red.zero_witness)
    return out


HANDLERS = {
    "charpoly": _charpoly, "ch-check": _ch_check, "det": _det, "hnf": _hnf, "snf": _snf,
    "solve": _solve, "kernel": _kernel, "certify": _certify, "verify": _verify,
    "invert": _invert, "reduce": _reduce,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="orzech", description="Exact linear algebra and Orzech certificates.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("input", help="input JSON document ('-' for standard input)")
    p.add_argument("-o", "--output", help="write the result here instead of standard output")
    p.add_argument("--seed", type=int, default=None, help="seed for any randomised helpers")
    return p


def _write(text, path):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    if args.seed is not None:
        random.seed(args.seed)
    try:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        doc = doc_io.loads(text)
        ring = doc_io.parse_ring(doc["ring"])
    except OSError as e:
        print(f"error: cannot read input: {e}", file=sys.stderr)
        return EXIT_INPUT
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT

    try:
        out = HANDLERS[args.command](doc, ring)
    except Failed as e:
        print(f"failed: {e}", file=sys.stderr)
        _write(doc_io.dumps(e.out), args.output)
        return EXIT_FAILED
    except NotSurjective as e:
        print(f"not surjective: {e}", file=sys.stderr)
        return EXIT_NOT_SURJECTIVE
    except (ParseError, DimensionMismatch, RingMismatch, UnsupportedRing, IllDefinedHom,
            NotEndomorphism, NotInKernel, ValueError) as e:
        print(f"input error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INPUT
    except InternalContradiction as e:
        print(f"internal contradiction: {e}", file=sys.stderr)
        return EXIT_FAILED
    except OrzechError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_FAILED
    _write(doc_io.dumps(out), args.output)
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
