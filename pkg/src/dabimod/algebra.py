"""Exact arithmetic in the two-strand bordered algebra B(2) over F2.

B(2) = B(2,0) + B(2,1) + B(2,2) + B(2,3) is a direct sum of four quiver
path algebras indexed by the weight (number of letters) of their
idempotents:

* B(2,0) = F2, spanned by the idempotent ``e`` (empty subset).
* B(2,1) has nodes A, B, C with arrows R1: A->B, L1: B->A, R2: B->C,
  L2: C->B and U-loops, modulo [Ri,Uj] = [Li,Uj] = 0, RiLi = LiRi = Ui,
  R1R2 = 0, L2L1 = 0, U2 = 0 at A and U1 = 0 at C.
* B(2,2) has nodes AB, AC, BC with arrows R2: AB->AC, R1: AC->BC,
  L1: BC->AC, L2: AC->AB modulo the commutator and RiLi = LiRi = Ui
  relations only; the composite paths R2R1: AB->BC and L1L2: BC->AB are
  irreducible and enter the basis.
* B(2,3) = F2[U1,U2] on the idempotent ABC.

Products are written in path order: in a*b the path a is traversed
first.  Every product of basis monomials is again a single basis
monomial or zero, which keeps all arithmetic here exact and table
driven.  Elements are F2 linear combinations, i.e. finite sets of
monomials with addition = symmetric difference.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

# ---------------------------------------------------------------------------
# Idempotents

IDEMS = ("e", "A", "B", "C", "AB", "AC", "BC", "ABC")
_IDEM_INDEX = {name: i for i, name in enumerate(IDEMS)}
_IDEM_ALIASES = {"0": "e", "∅": "e", "O": "e"}


def idem(name: str) -> str:
    """Normalize an idempotent token ('e', 'A', ..., 'ABC')."""
    name = _IDEM_ALIASES.get(name, name)
    if name not in _IDEM_INDEX:
        raise ValueError(f"unknown idempotent {name!r}")
    return name


def idem_weight(name: str) -> int:
    """Weight = number of strand labels; selects the summand B(2,weight)."""
    return 0 if name == "e" else len(name)


def idem_index(name: str) -> int:
    return _IDEM_INDEX[name]


def idems_of_weight(w: int) -> tuple[str, ...]:
    return tuple(i for i in IDEMS if idem_weight(i) == w)


# ---------------------------------------------------------------------------
# Letters (the non-U path part of a monomial)

LETTERS = ("Id", "R1", "L1", "R2", "L2", "R2R1", "L1L2")
_LETTER_INDEX = {name: i for i, name in enumerate(LETTERS)}

# Arrow endpoints per summand weight, in path order (source -> target).
_ARROWS = {
    1: {"R1": ("A", "B"), "L1": ("B", "A"), "R2": ("B", "C"), "L2": ("C", "B")},
    2: {
        "R2": ("AB", "AC"),
        "R1": ("AC", "BC"),
        "L1": ("BC", "AC"),
        "L2": ("AC", "AB"),
        "R2R1": ("AB", "BC"),
        "L1L2": ("BC", "AB"),
    },
}

LETTER_LENGTH = {"Id": 0, "R1": 1, "L1": 1, "R2": 1, "L2": 1, "R2R1": 2, "L1L2": 2}


def letter_endpoints(letter: str, weight: int) -> tuple[str, str] | None:
    """Source/target idempotents of a letter in B(2,weight), or None."""
    if letter == "Id":
        return None  # any node of the given weight
    return _ARROWS.get(weight, {}).get(letter)


# Composition table for non-identity letters, per weight:
# (a, b) -> (letter, du1, du2), or None when the product is zero.
# Pairs absent from the table are not composable (target != source).
_LETTER_MUL = {
    1: {
        ("R1", "L1"): ("Id", 1, 0),
        ("L1", "R1"): ("Id", 1, 0),
        ("R2", "L2"): ("Id", 0, 1),
        ("L2", "R2"): ("Id", 0, 1),
        ("R1", "R2"): None,  # R1R2 = 0
        ("L2", "L1"): None,  # L2L1 = 0
    },
    2: {
        ("R1", "L1"): ("Id", 1, 0),
        ("L1", "R1"): ("Id", 1, 0),
        ("R2", "L2"): ("Id", 0, 1),
        ("L2", "R2"): ("Id", 0, 1),
        ("R2", "R1"): ("R2R1", 0, 0),
        ("L1", "L2"): ("L1L2", 0, 0),
        ("R2R1", "L1"): ("R2", 1, 0),
        ("L1L2", "R2"): ("L1", 0, 1),
        ("L2", "R2R1"): ("R1", 0, 1),
        ("R1", "L1L2"): ("L2", 1, 0),
        ("R2R1", "L1L2"): ("Id", 1, 1),
        ("L1L2", "R2R1"): ("Id", 1, 1),
    },
}


def _supported(left: str, right: str, letter: str, e1: int, e2: int) -> bool:
    """Basis-support test: does this monomial survive in the quotient?

    In B(2,1) the node relations kill U2 left of B, U1 right of B, and
    any mixed U1*U2 (sliding U1 = L1R1, U2 = R2L2 into R1R2 = 0).
    """
    w = idem_weight(left)
    if w == 0:
        return e1 == 0 and e2 == 0
    if w != 1:
        return True
    if e1 and e2:
        return False
    visited = {left, right}
    if letter in ("R1", "L1"):
        visited = {"A", "B"}
    elif letter in ("R2", "L2"):
        visited = {"B", "C"}
    if e2 and "A" in visited:
        return False
    if e1 and "C" in visited:
        return False
    return True


@dataclass(frozen=True, order=True)
class BasisMonomial:
    """One F2-basis element: idempotent pair, path letter, U-exponents."""

    left: str
    right: str
    letter: str
    e1: int = 0
    e2: int = 0

    def __post_init__(self) -> None:
        if self.left not in _IDEM_INDEX or self.right not in _IDEM_INDEX:
            raise ValueError(f"bad idempotents {self.left!r}, {self.right!r}")
        w = idem_weight(self.left)
        if idem_weight(self.right) != w:
            raise ValueError(f"idempotents {self.left}, {self.right} span summands")
        if self.letter == "Id":
            if self.left != self.right:
                raise ValueError("identity letter requires equal idempotents")
        else:
            ends = letter_endpoints(self.letter, w)
            if ends is None or ends != (self.left, self.right):
                raise ValueError(
                    f"letter {self.letter} is not a {self.left}->{self.right} path"
                )
        if self.e1 < 0 or self.e2 < 0:
            raise ValueError("negative U-exponent")
        if not _supported(self.left, self.right, self.letter, self.e1, self.e2):
            raise ValueError(f"monomial {self.letter}*U1^{self.e1}*U2^{self.e2} "
                             f"at ({self.left},{self.right}) is zero in B(2)")

    @property
    def weight(self) -> int:
        return idem_weight(self.left)

    def degree(self) -> int:
        return intrinsic_degree(self)

    def is_idempotent(self) -> bool:
        return self.letter == "Id" and self.e1 == 0 and self.e2 == 0

    def sort_key(self) -> tuple[int, int, int, int, int]:
        return (
            _LETTER_INDEX[self.letter],
            idem_index(self.left),
            self.e1,
            self.e2,
            idem_index(self.right),
        )

    def __str__(self) -> str:
        return render_monomial(self)

    def to_json(self) -> dict:
        return {
            "left": self.left,
            "right": self.right,
            "letter": self.letter,
            "e1": self.e1,
            "e2": self.e2,
        }

    @staticmethod
    def from_json(obj: dict) -> "BasisMonomial":
        return BasisMonomial(
            idem(obj["left"]), idem(obj["right"]), obj["letter"],
            int(obj["e1"]), int(obj["e2"]),
        )


def monomial(left: str, letter: str, e1: int = 0, e2: int = 0) -> BasisMonomial:
    """Build a monomial from its left idempotent; the letter fixes the right."""
    left = idem(left)
    if letter == "Id":
        return BasisMonomial(left, left, "Id", e1, e2)
    ends = letter_endpoints(letter, idem_weight(left))
    if ends is None or ends[0] != left:
        raise ValueError(f"letter {letter} has no source {left}")
    return BasisMonomial(left, ends[1], letter, e1, e2)


def unit(node: str) -> BasisMonomial:
    return monomial(node, "Id")


def intrinsic_degree(m: BasisMonomial) -> int:
    """deg(Ri) = deg(Li) = 1 and deg(Ui) = 2; homological degree is 0."""
    return LETTER_LENGTH[m.letter] + 2 * (m.e1 + m.e2)


def render_monomial(m: BasisMonomial) -> str:
    """Canonical text form, e.g. ``R2R1*U1^2*U2`` or ``Id(B)*U2^3``."""
    parts = []
    if m.letter == "Id":
        parts.append(f"Id({m.left})")
    else:
        parts.append(m.letter)
    if m.e1:
        parts.append("U1" if m.e1 == 1 else f"U1^{m.e1}")
    if m.e2:
        parts.append("U2" if m.e2 == 1 else f"U2^{m.e2}")
    return "*".join(parts)


# ---------------------------------------------------------------------------
# Elements

class AlgebraElement:
    """A finite F2 linear combination of basis monomials (a set of terms)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[BasisMonomial] = ()):
        self.terms: frozenset[BasisMonomial] = frozenset(terms)

    @staticmethod
    def zero() -> "AlgebraElement":
        return _ZERO

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        return AlgebraElement(self.terms ^ other.terms)

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        acc: set[BasisMonomial] = set()
        for a in self.terms:
            for b in other.terms:
                c = multiply_monomials(a, b)
                if c is not None:
                    acc ^= {c}
        return AlgebraElement(acc)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, AlgebraElement) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __iter__(self) -> Iterator[BasisMonomial]:
        return iter(sorted(self.terms, key=BasisMonomial.sort_key))

    def __len__(self) -> int:
        return len(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(render_monomial(m) for m in self)

    def __repr__(self) -> str:
        return f"AlgebraElement({self})"


_ZERO = AlgebraElement()


def element(*terms: BasisMonomial) -> AlgebraElement:
    return AlgebraElement(terms)


@lru_cache(maxsize=1 << 18)
def multiply_monomials(a: BasisMonomial, b: BasisMonomial) -> BasisMonomial | None:
    """Product of two basis monomials; None encodes zero.

    The letter table composes the path parts, U-exponents add (they are
    central within each summand), then the support test applies the node
    relations of B(2,1).
    """
    if a.right != b.left:
        return None
    e1 = a.e1 + b.e1
    e2 = a.e2 + b.e2
    if a.letter == "Id":
        letter, left, right = b.letter, a.left, b.right
    elif b.letter == "Id":
        letter, left, right = a.letter, a.left, b.right
    else:
        key = (a.letter, b.letter)
        table = _LETTER_MUL[a.weight]
        if key not in table:
            return None
        hit = table[key]
        if hit is None:
            return None
        letter, du1, du2 = hit
        e1 += du1
        e2 += du2
        left, right = a.left, b.right
    if not _supported(left, right, letter, e1, e2):
        return None
    return BasisMonomial(left, right, letter, e1, e2)


def multiply_basis(a: BasisMonomial, b: BasisMonomial) -> AlgebraElement:
    """Basis expansion of a*b (path order: a first); 0 on mismatch."""
    c = multiply_monomials(a, b)
    return _ZERO if c is None else AlgebraElement((c,))


# ---------------------------------------------------------------------------
# Basis enumeration

def enumerate_basis(summand: int, max_exp: int) -> list[BasisMonomial]:
    """All basis monomials of B(2,summand) with e1, e2 <= max_exp.

    Deduplicated (U1^0*Id(B) = U2^0*Id(B) appears once) and sorted by
    (letter, node, exponents).
    """
    if not 0 <= summand <= 3:
        raise ValueError(f"summand {summand} out of range 0..3")
    out: set[BasisMonomial] = set()
    for node in idems_of_weight(summand):
        for e1 in range(max_exp + 1):
            for e2 in range(max_exp + 1):
                try:
                    out.add(BasisMonomial(node, node, "Id", e1, e2))
                except ValueError:
                    continue
    for letter in LETTERS[1:]:
        ends = letter_endpoints(letter, summand)
        if ends is None:
            continue
        left, right = ends
        for e1 in range(max_exp + 1):
            for e2 in range(max_exp + 1):
                try:
                    out.add(BasisMonomial(left, right, letter, e1, e2))
                except ValueError:
                    continue
    return sorted(out, key=BasisMonomial.sort_key)


def monomials_from(left: str, max_degree: int) -> list[BasisMonomial]:
    """All basis monomials with the given left idempotent and degree <= bound."""
    left = idem(left)
    w = idem_weight(left)
    out: list[BasisMonomial] = []
    letters = ["Id"] + [l for l in LETTERS[1:] if (letter_endpoints(l, w) or ("", ""))[0] == left]
    for letter in letters:
        room = max_degree - LETTER_LENGTH[letter]
        if room < 0:
            continue
        for e1 in range(room // 2 + 1):
            for e2 in range((room - 2 * e1) // 2 + 1):
                try:
                    m = monomial(left, letter, e1, e2)
                except ValueError:
                    continue
                out.append(m)
    return sorted(out, key=BasisMonomial.sort_key)


@lru_cache(maxsize=1 << 14)
def split_pairs(b: BasisMonomial) -> tuple[tuple[BasisMonomial, BasisMonomial], ...]:
    """All ordered factorizations b = b1*b2 into basis monomials.

    Includes the idempotent splits (Id(left), b) and (b, Id(right)).
    Over F2 each factorization contributes coefficient 1.
    """
    deg = intrinsic_degree(b)
    out = []
    for b1 in monomials_from(b.left, deg):
        d1 = intrinsic_degree(b1)
        for b2 in monomials_from(b1.right, deg - d1):
            if intrinsic_degree(b2) != deg - d1 or b2.right != b.right:
                continue
            if multiply_monomials(b1, b2) == b:
                out.append((b1, b2))
    return tuple(out)
