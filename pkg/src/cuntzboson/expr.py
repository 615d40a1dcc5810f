"""Parser and evaluator for operator expressions.

Grammar: an expression is a sum of products separated by ``+``/``-``; a
product juxtaposes factors, each a generator token ``s<k>`` / ``a<k>`` with
optional trailing ``*``, or a literal (``3``, ``3/2``, ``sqrt(2)``).
Example: ``s1 s2* + sqrt(2) s3``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .common import DomainError, ExprError
from .cuntz import CuntzMonomial, CuntzPolynomial, RepSpec, apply_generator
from .scalar import ONE, RadicalScalar, sqrt_nat
from .states import Ket

_TOKEN = re.compile(
    r"\s*(?:(?P<gen>[sa])(?P<index>\d+)(?P<star>\*?)"
    r"|(?P<sqrt>sqrt\(\s*(?P<radicand>\d+)\s*\))"
    r"|(?P<number>\d+(?:/\d+)?)"
    r"|(?P<sign>[+-]))"
)


@dataclass(frozen=True)
class Factor:
    kind: str  # 's' or 'a'
    index: int
    star: bool

    def __str__(self) -> str:
        return f"{self.kind}{self.index}{'*' if self.star else ''}"


@dataclass(frozen=True)
class Term:
    coeff: RadicalScalar
    factors: tuple[Factor, ...]


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if not match or match.end() == match.start():
            if text[pos:].strip():
                bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
                raise ExprError(f"unexpected character {text[bad]!r}", bad)
            break
        if match.group("gen"):
            index = int(match.group("index"))
            if index < 1:
                raise ExprError("generator indices are 1-based", match.start())
            tokens.append(("factor", Factor(match.group("gen"), index, bool(match.group("star"))), match.start()))
        elif match.group("sqrt"):
            tokens.append(("literal", sqrt_nat(int(match.group("radicand"))), match.start()))
        elif match.group("number"):
            tokens.append(("literal", RadicalScalar.rational(Fraction(match.group("number"))), match.start()))
        else:
            tokens.append(("sign", match.group("sign"), match.start()))
        pos = match.end()
    return tokens


def parse_expression(text: str) -> list[Term]:
    tokens = _tokenize(text)
    if not tokens:
        raise ExprError("empty expression", 0)
    terms: list[Term] = []
    coeff = ONE
    factors: list[Factor] = []
    saw_content = False

    def flush(position: int) -> None:
        nonlocal coeff, factors, saw_content
        if not saw_content:
            raise ExprError("empty term", position)
        terms.append(Term(coeff, tuple(factors)))
        coeff, factors, saw_content = ONE, [], False

    for kind, value, position in tokens:
        if kind == "sign":
            if saw_content:
                flush(position)
            if value == "-":
                coeff = -coeff
        elif kind == "literal":
            coeff = coeff * value
            saw_content = True
        else:
            factors.append(value)
            saw_content = True
    flush(tokens[-1][2] if tokens else 0)
    return terms


def eval_on_ket(spec: RepSpec, terms: list[Term], state: Ket) -> Ket:
    """Apply the expression to a ket; factors in a product act right to left.

    With a finite alphabet the ladder tokens act through the embedding block
    code, which requires every label to end in 1^inf.
    """
    total = Ket()
    for term in terms:
        v = state
        for factor in reversed(term.factors):
            if factor.kind == "s":
                v = apply_generator(spec, factor.index, v, star=factor.star)
            else:
                v = _apply_ladder(spec, factor, v)
        total = total + term.coeff * v
    return total


def _apply_ladder(spec: RepSpec, factor: Factor, v: Ket) -> Ket:
    from .boson import apply_annihilate, apply_create

    if spec.alphabet is None:
        return apply_create(factor.index, v) if factor.star else apply_annihilate(factor.index, v)
    from .embed import EmbeddingSpec, embedded_annihilate, embedded_create

    ambient = EmbeddingSpec(spec.alphabet)
    return (embedded_create if factor.star else embedded_annihilate)(ambient, factor.index, v)


def to_cuntz_polynomial(terms: list[Term]) -> CuntzPolynomial:
    """Normalize a pure-isometry expression to a sum of s_J s_K* monomials."""
    total = CuntzPolynomial()
    for term in terms:
        acc = CuntzPolynomial([CuntzMonomial(term.coeff)])
        for factor in term.factors:
            if factor.kind != "s":
                raise DomainError(f"ladder factor {factor} has no isometry normal form")
            step = CuntzPolynomial([
                CuntzMonomial(ONE, () if factor.star else (factor.index,),
                              (factor.index,) if factor.star else ())
            ])
            acc = acc.multiply(step)
        total = total + acc
    return total
