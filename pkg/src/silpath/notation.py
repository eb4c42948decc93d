"""Text literals for elements, paths, weights and rationals, and JSON helpers.

Element literal: ``w=[1 2] t=[0,-1]`` (a word for the finite part, then
the coweight coordinates). Path literal: ``SiLS{w=[] t=[1] @ 1/2; w=[] t=[0] @ 1}``.
"""

import re
from fractions import Fraction

from .cartan import LevelZeroWeight, format_weight
from .errors import ParseError
from .weyl import AffineWeylElem, FiniteWeylElem

_ELEM_RE = re.compile(r"^\s*w\s*=\s*\[([^\]]*)\]\s*t\s*=\s*\[([^\]]*)\]\s*$")
_RAT_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(s):
    m = _RAT_RE.match(s.replace("−", "-"))
    if not m:
        raise ParseError(f"not a rational number: {s!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ParseError(f"zero denominator in {s!r}")
    return Fraction(num, den)


def format_rational(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_element(cartan, s):
    m = _ELEM_RE.match(s.replace("−", "-"))
    if not m:
        raise ParseError(f"not an element literal: {s!r}")
    word_s, t_s = m.group(1).strip(), m.group(2).strip()
    try:
        word = [int(tok) for tok in word_s.replace(",", " ").split()]
        xi = tuple(int(tok) for tok in t_s.split(",")) if t_s else ()
    except ValueError:
        raise ParseError(f"bad integer in {s!r}") from None
    if any(i < 1 or i > cartan.rank for i in word):
        raise ParseError(f"word letters must lie in 1..{cartan.rank}: {s!r}")
    if len(xi) != cartan.rank:
        raise ParseError(f"expected {cartan.rank} coweight coordinates in {s!r}")
    return AffineWeylElem(FiniteWeylElem.from_word(cartan, word), xi)


def format_element(x):
    return str(x)


def parse_path(cartan, s, lam):
    from .paths import SiLSPath

    s = s.strip()
    if not (s.startswith("SiLS{") and s.endswith("}")):
        raise ParseError(f"path literal must look like SiLS{{...}}: {s!r}")
    body = s[5:-1]
    elems, cuts = [], [Fraction(0)]
    for chunk in body.split(";"):
        if "@" not in chunk:
            raise ParseError(f"missing '@' in {chunk!r}")
        el, cut = chunk.rsplit("@", 1)
        elems.append(parse_element(cartan, el))
        cuts.append(parse_rational(cut))
    return SiLSPath(elems, cuts, lam, normal=False)


def format_path(eta):
    return str(eta)


def parse_lambda(cartan, s):
    """Comma-separated nonnegative integer coordinates over the ``varpi_i``."""
    try:
        coords = tuple(int(tok) for tok in s.split(","))
    except ValueError:
        raise ParseError(f"bad lambda {s!r}") from None
    if len(coords) != cartan.rank:
        raise ParseError(f"lambda needs {cartan.rank} coordinates, got {len(coords)}")
    if any(c < 0 for c in coords):
        raise ParseError("lambda must be dominant (nonnegative coordinates)")
    return LevelZeroWeight(coords, 0)


def cartan_dict(cartan):
    return {
        "type": cartan.type_label,
        "rank": cartan.rank,
        "matrix": [list(r) for r in cartan.cartan_matrix],
        "marks": list(cartan.marks),
        "comarks": list(cartan.comarks),
    }


def weight_dict(mu):
    return {"fun": [format_rational(v) for v in mu.fun], "delta": format_rational(mu.delta)}


def format_char(counts):
    """``wt:count`` entries in order of first appearance."""
    items = counts.items()
    return ", ".join(f"{format_weight(w)}:{n}" for w, n in items)
