"""Command-line front end.

    dschubert <mode> [-code] [--display-positive] P1 - P2 [- P3 ...]

``mode`` is ``ordinary`` (y = z = 0), ``equivariant`` (z = y) or ``mixed``
(y and z kept apart).  Each operand is a space-separated window, or a code
when ``-code`` is given.  Result lines read ``<coefficient>  <w>`` and are
sorted by length of ``w``, then by window.

Exit codes: 0 on success, 2 on a parse error, 3 if positive display was
requested but some coefficient has no positive form.
"""

from __future__ import annotations

import argparse
import sys
from collections import defaultdict
from dataclasses import dataclass, field

from .perm import IDENTITY, Permutation, PermutationError, code, from_code, from_window, length
from .pieri import CoeffMap
from .poly import Poly, expand_in_negative_roots
from .product import product_equivariant, product_mixed, product_ordinary

__all__ = [
    "ParseError", "InvalidPermutation", "PositivizationUnavailable", "Request",
    "parse", "execute", "render", "main",
]

MODES = ("ordinary", "equivariant", "mixed")


class ParseError(ValueError):
    pass


class InvalidPermutation(ParseError):
    pass


class PositivizationUnavailable(RuntimeError):
    pass


@dataclass
class Request:
    mode: str
    operands: list = field(default_factory=list)
    as_code: bool = False
    display_positive: bool = False


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def _build_parser() -> _Parser:
    p = _Parser(prog="dschubert", add_help=True,
                description="Products of (double) Schubert polynomials.")
    p.add_argument("mode", choices=MODES)
    p.add_argument("-code", dest="as_code", action="store_true",
                   help="read operands as permutation codes")
    p.add_argument("--display-positive", action="store_true",
                   help="print coefficients in a manifestly positive form")
    return p


def _split_operands(tokens: list[str]) -> list[list[str]]:
    groups: list[list[str]] = [[]]
    for tok in tokens:
        if tok == "-":
            groups.append([])
        else:
            groups[-1].append(tok)
    return groups


def parse(argv: list[str]) -> Request:
    """Turn an argument list (without the program name) into a Request."""
    argv = list(argv)
    # the operand separator is a bare "-", so argparse only sees the prefix
    cut = next((i for i, tok in enumerate(argv) if tok == "-" or tok.isdigit()), len(argv))
    ns = _build_parser().parse_args(argv[:cut])
    rest = argv[cut:]
    for tok in rest:
        if tok != "-" and not tok.isdigit():
            raise ParseError(f"bad token {tok!r}: expected a nonnegative integer or '-'")
    groups = _split_operands(rest)
    if any(not g for g in groups):
        raise ParseError("empty operand: check the '-' separators")
    if len(groups) < 2:
        raise ParseError("need at least two operands separated by '-'")
    operands = []
    for g in groups:
        vals = [int(tok) for tok in g]
        try:
            operands.append(from_code(vals) if ns.as_code else from_window(vals))
        except PermutationError as e:
            raise InvalidPermutation(f"{' '.join(g)}: {e}") from None
        except ValueError as e:
            raise ParseError(f"{' '.join(g)}: {e}") from None
    if ns.mode == "mixed" and len(operands) > 2:
        raise ParseError("mixed mode takes exactly two operands")
    return Request(ns.mode, operands, ns.as_code, ns.display_positive)


def _fold_ordinary(operands) -> dict:
    acc = {operands[0]: 1}
    for v in operands[1:]:
        nxt: dict = defaultdict(int)
        for w, c in acc.items():
            for w2, c2 in product_ordinary(w, v).items():
                nxt[w2] += c * c2
        acc = {w: c for w, c in nxt.items() if c}
    return acc


def _fold_equivariant(operands) -> CoeffMap:
    u, v = operands[0], operands[1]
    acc = product_equivariant(u, v)
    if len(operands) == 2:
        return acc
    running = dict(acc)
    for v in operands[2:]:
        nxt: dict = defaultdict(Poly)
        for w, c in running.items():
            for w2, c2 in product_equivariant(w, v).items():
                nxt[w2] = nxt[w2] + c * c2
        running = {w: c for w, c in nxt.items() if c}
    return CoeffMap(running, method="fold")


def execute(req: Request):
    """Compute the product described by ``req``.

    Ordinary mode returns integer coefficients; the other modes return a
    :class:`CoeffMap` of polynomials.
    """
    if len(req.operands) < 2:
        raise ParseError("need at least two operands")
    if req.mode == "ordinary":
        return _fold_ordinary(req.operands)
    if req.mode == "equivariant":
        return _fold_equivariant(req.operands)
    if req.mode == "mixed":
        if len(req.operands) != 2:
            raise ParseError("mixed mode takes exactly two operands")
        return product_mixed(*req.operands)
    raise ParseError(f"unknown mode {req.mode!r}")


def _label(w: Permutation, as_code: bool) -> str:
    if as_code:
        c = code(w)
        return " ".join(map(str, c)) if c else "0"
    return " ".join(map(str, w)) if w != IDENTITY else "1"


def _coef_text(w, c, result, req: Request) -> str:
    if not req.display_positive or req.mode == "ordinary":
        return str(c)
    if req.mode == "equivariant":
        return str(expand_in_negative_roots(c))
    factored = getattr(result, "factored", None)
    if factored is None or w not in factored:
        raise PositivizationUnavailable(
            f"no positive form for the coefficient of {w}; general positivization is not supported")
    return str(factored[w])


def render(result, req: Request) -> str:
    """One line per nonzero coefficient, sorted by (length, window)."""
    lines = []
    for w in sorted((w for w, c in result.items() if c), key=lambda w: (length(w), tuple(w))):
        lines.append(f"{_coef_text(w, result[w], result, req)}  {_label(w, req.as_code)}")
    return "\n".join(lines) + ("\n" if lines else "")


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    try:
        req = parse(argv)
    except ParseError as e:
        print(f"dschubert: {e}", file=sys.stderr)
        return 2
    try:
        text = render(execute(req), req)
    except PositivizationUnavailable as e:
        print(f"dschubert: {e}", file=sys.stderr)
        return 3
    sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
