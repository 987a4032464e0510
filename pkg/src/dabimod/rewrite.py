"""Independent rewriting oracle for B(2): reduce quiver words from scratch.

This module deliberately avoids the composition table in
:mod:`dabimod.algebra`.  A word is a sequence of tokens over
``R1, L1, R2, L2, U1, U2, Id(X)`` interpreted as a path in the quiver of
one summand; the oracle reduces it by applying the defining relations in
every possible order and checks that all reduction orders agree (the
relations are length-nonincreasing, so the search is finite).

Used to validate the multiplication table: for basis monomials a, b the
concatenated word of a and b must rewrite to exactly multiply_basis(a, b).
"""

from __future__ import annotations

from functools import lru_cache

from .algebra import (
    AlgebraElement,
    BasisMonomial,
    element,
    idem,
    idem_weight,
    letter_endpoints,
)

# Arrow fusions (a, b) -> U-loop increment, valid in both quiver summands.
_FUSE = {
    ("R1", "L1"): (1, 0),
    ("L1", "R1"): (1, 0),
    ("R2", "L2"): (0, 1),
    ("L2", "R2"): (0, 1),
}

# Length-two paths equal to zero; these exist only in B(2,1).
_KILL_W1 = {("R1", "R2"), ("L2", "L1")}

_ARROW_TOKENS = ("R1", "L1", "R2", "L2")


def word_of_monomial(m: BasisMonomial) -> tuple[str, ...]:
    """A presentation word for a basis monomial (anchor, arrows, U-loops)."""
    arrows = {"R2R1": ("R2", "R1"), "L1L2": ("L1", "L2")}.get(
        m.letter, () if m.letter == "Id" else (m.letter,)
    )
    return (f"Id({m.left})",) + tuple(arrows) + ("U1",) * m.e1 + ("U2",) * m.e2


def _parse(word: tuple[str, ...], summand: int):
    """Split a word into (start, arrows, u1, u2); None if not a composable path."""
    start = None  # node where the path begins
    cur = None  # current endpoint while scanning
    arrows: list[str] = []
    u1 = u2 = 0
    for tok in word:
        if tok == "U1":
            u1 += 1
        elif tok == "U2":
            u2 += 1
        elif tok in _ARROW_TOKENS:
            ends = letter_endpoints(tok, summand)
            if ends is None:
                return None  # arrow absent from this summand's quiver
            src, dst = ends
            if cur is None:
                start = src
            elif cur != src:
                return None
            cur = dst
            arrows.append(tok)
        elif tok.startswith("Id(") and tok.endswith(")"):
            here = idem(tok[3:-1])
            if idem_weight(here) != summand:
                return None
            if cur is None:
                start = here
            elif cur != here:
                return None
            cur = here
        else:
            raise ValueError(f"unknown token {tok!r}")
    if start is None:
        if summand == 0:
            start = "e"
        elif summand == 3:
            start = "ABC"
        else:
            raise ValueError("word has no anchor; include an Id(X) token")
    return start, tuple(arrows), u1, u2


def _end(start: str, arrows) -> str:
    node = start
    for a in arrows:
        node = letter_endpoints(a, idem_weight(node))[1]
    return node


@lru_cache(maxsize=1 << 16)
def _reduce_all(summand: int, arrows: tuple[str, ...]) -> frozenset:
    """Normal forms reachable by relation steps in any order.

    Entries are (arrow-word, du1, du2) triples, or None for a form that
    reached a zero path (R1R2 or L2L1 in B(2,1)).
    """
    moves = []
    killed = False
    for i in range(len(arrows) - 1):
        pair = (arrows[i], arrows[i + 1])
        if summand == 1 and pair in _KILL_W1:
            killed = True
        elif pair in _FUSE:
            du1, du2 = _FUSE[pair]
            moves.append((arrows[:i] + arrows[i + 2:], du1, du2))
    if not moves and not killed:
        return frozenset({(arrows, 0, 0)})
    out: set = set()
    if killed:
        out.add(None)
    for rest, du1, du2 in moves:
        for form in _reduce_all(summand, rest):
            if form is None:
                out.add(None)
            else:
                out.add((form[0], form[1] + du1, form[2] + du2))
    return frozenset(out)


def _node_kills(summand: int, start: str, arrows: tuple[str, ...], u1: int, u2: int) -> bool:
    """Node relations of B(2,1), applied by sliding U-loops along the path.

    U2 vanishes at A and U1 at C; a mixed U1*U2 at B expands to
    L1*R1*R2*L2, which contains the zero path R1*R2.
    """
    if summand != 1:
        return False
    visited = {start}
    node = start
    for a in arrows:
        node = letter_endpoints(a, 1)[1]
        visited.add(node)
    if u2 and "A" in visited:
        return True
    if u1 and "C" in visited:
        return True
    return bool(u1 and u2)


def rewrite_word(word, summand: int) -> AlgebraElement:
    """Fully reduced basis expansion of a quiver word; 0 if non-composable.

    The word may contain arrow tokens, ``U1``/``U2`` and ``Id(X)``
    anchors.  Raises ValueError for a word whose starting node cannot be
    inferred (pure-U words in B(2,1) or B(2,2) need an anchor).
    """
    if not 0 <= summand <= 3:
        raise ValueError(f"summand {summand} out of range 0..3")
    parsed = _parse(tuple(word), summand)
    if parsed is None:
        return AlgebraElement.zero()
    start, arrows, u1, u2 = parsed
    if summand == 0 and (u1 or u2):
        return AlgebraElement.zero()  # B(2,0) has no U-loops
    results = set()
    for form in _reduce_all(summand, arrows):
        if form is None:
            results.add(None)
            continue
        red, du1, du2 = form
        if len(red) > 2:
            raise AssertionError(f"irreducible word of length {len(red)}: {red}")
        e1, e2 = u1 + du1, u2 + du2
        if _node_kills(summand, start, red, e1, e2):
            results.add(None)
            continue
        letter = "".join(red) if red else "Id"
        results.add(BasisMonomial(start, _end(start, red), letter, e1, e2))
    if len(results) != 1:
        raise AssertionError(f"rewriting is not confluent on {word}: {results}")
    (only,) = results
    return AlgebraElement.zero() if only is None else element(only)


def rewrite_product(a: BasisMonomial, b: BasisMonomial) -> AlgebraElement:
    """Oracle value of a*b: rewrite the concatenated presentation words."""
    if a.right != b.left:
        return AlgebraElement.zero()
    return rewrite_word(word_of_monomial(a) + word_of_monomial(b), a.weight)
