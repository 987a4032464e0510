"""Parameterized secondary-matrix entries: patterns, index constraints, schemas.

A TermSchema is one family ``output (x) (input_1, ..., input_{i-1})`` of
delta-operation terms, with U-exponents given by affine expressions in
index variables (each of which ranges over the nonnegative integers,
further restricted by linear atoms such as ``n < t`` and excluded tuples
such as ``(k,l) != (0,0)``).

Patterns carry no idempotents; those are anchored by the generators of
the cell a schema sits in (the column generator fixes the output's left
idempotent and the first input's left idempotent, and letters propagate
the chain from there).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .algebra import LETTER_LENGTH, LETTERS


class MalformedSchemaError(ValueError):
    """A schema family that cannot be enumerated or fails its invariants."""


# ---------------------------------------------------------------------------
# Affine exponent expressions

_TERM_RE = re.compile(r"^(?:(\d+)\s*\*?\s*)?([a-z]\w*)$|^(\d+)$")


@dataclass(frozen=True, order=True)
class ExpExpr:
    """c0 + sum(c_v * v) with nonnegative variable coefficients."""

    const: int = 0
    coeffs: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        if any(c <= 0 for _, c in self.coeffs):
            raise MalformedSchemaError(f"nonpositive coefficient in {self}")

    @staticmethod
    def parse(text: str) -> "ExpExpr":
        text = text.strip()
        if text.startswith("(") and text.endswith(")"):
            text = text[1:-1]
        const = 0
        coeffs: dict[str, int] = {}
        for signed in re.finditer(r"([+-]?)\s*([^+-]+)", text):
            sign = -1 if signed.group(1) == "-" else 1
            m = _TERM_RE.match(signed.group(2).strip())
            if m is None:
                raise MalformedSchemaError(f"cannot parse exponent {text!r}")
            if m.group(3) is not None:
                const += sign * int(m.group(3))
            else:
                coeff = sign * int(m.group(1) or 1)
                var = m.group(2)
                coeffs[var] = coeffs.get(var, 0) + coeff
        return ExpExpr(const, tuple(sorted((v, c) for v, c in coeffs.items() if c)))

    def evaluate(self, assign: Mapping[str, int]) -> int:
        return self.const + sum(c * assign[v] for v, c in self.coeffs)

    def coeff(self, var: str) -> int:
        return dict(self.coeffs).get(var, 0)

    @property
    def vars(self) -> tuple[str, ...]:
        return tuple(v for v, _ in self.coeffs)

    def rename(self, table: Mapping[str, str]) -> "ExpExpr":
        return ExpExpr(
            self.const, tuple(sorted((table[v], c) for v, c in self.coeffs))
        )

    def __str__(self) -> str:
        parts = [(v if c == 1 else f"{c}{v}") for v, c in self.coeffs]
        if not parts:
            return str(self.const)
        body = "+".join(parts)
        if self.const:
            body += f"{self.const:+d}"
        return body


ZERO_EXP = ExpExpr()


# ---------------------------------------------------------------------------
# Monomial patterns

@dataclass(frozen=True, order=True)
class MonomialPattern:
    """Letter plus affine U1/U2 exponents; idempotents come from context."""

    letter: str
    e1: ExpExpr = ZERO_EXP
    e2: ExpExpr = ZERO_EXP

    def __post_init__(self):
        if self.letter not in LETTERS:
            raise MalformedSchemaError(f"unknown letter {self.letter!r}")

    @staticmethod
    def parse(text: str) -> "MonomialPattern":
        letter = "Id"
        e1 = e2 = ZERO_EXP
        for factor in _split_factors(text):
            if factor.startswith("U1") or factor.startswith("U2"):
                exp = ExpExpr(1)
                rest = factor[2:]
                if rest.startswith("^"):
                    exp = ExpExpr.parse(rest[1:])
                elif rest:
                    raise MalformedSchemaError(f"cannot parse factor {factor!r}")
                if factor[1] == "1":
                    e1 = _add(e1, exp)
                else:
                    e2 = _add(e2, exp)
            elif factor in LETTERS or factor.startswith("Id("):
                tok = "Id" if factor.startswith("Id(") else factor
                if letter != "Id":
                    raise MalformedSchemaError(f"two letters in pattern {text!r}")
                letter = tok
            else:
                raise MalformedSchemaError(f"cannot parse factor {factor!r}")
        return MonomialPattern(letter, e1, e2)

    def degree_expr(self) -> tuple[int, dict[str, int]]:
        """Intrinsic degree as (const, var coefficients)."""
        const = LETTER_LENGTH[self.letter] + 2 * (self.e1.const + self.e2.const)
        coeffs: dict[str, int] = {}
        for v, c in self.e1.coeffs + self.e2.coeffs:
            coeffs[v] = coeffs.get(v, 0) + 2 * c
        return const, coeffs

    @property
    def vars(self) -> tuple[str, ...]:
        seen = []
        for v in self.e1.vars + self.e2.vars:
            if v not in seen:
                seen.append(v)
        return tuple(seen)

    def rename(self, table: Mapping[str, str]) -> "MonomialPattern":
        return MonomialPattern(self.letter, self.e1.rename(table), self.e2.rename(table))

    def __str__(self) -> str:
        parts = [] if self.letter == "Id" else [self.letter]
        for name, exp in (("U1", self.e1), ("U2", self.e2)):
            if exp == ZERO_EXP:
                continue
            if exp == ExpExpr(1):
                parts.append(name)
            elif not exp.coeffs:
                parts.append(f"{name}^{exp.const}")
            elif not exp.const and len(exp.coeffs) == 1 and exp.coeffs[0][1] == 1:
                parts.append(f"{name}^{exp.coeffs[0][0]}")
            else:
                parts.append(f"{name}^({exp})")
        return "*".join(parts) if parts else "Id"


def _add(a: ExpExpr, b: ExpExpr) -> ExpExpr:
    coeffs: dict[str, int] = dict(a.coeffs)
    for v, c in b.coeffs:
        coeffs[v] = coeffs.get(v, 0) + c
    return ExpExpr(a.const + b.const, tuple(sorted(coeffs.items())))


def _split_factors(text: str) -> list[str]:
    """Split on '*' at parenthesis depth zero."""
    out, depth, cur = [], 0, []
    for ch in text.strip():
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "*" and depth == 0:
            out.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    if cur:
        out.append("".join(cur).strip())
    return [f for f in out if f]


# ---------------------------------------------------------------------------
# Index constraints

@dataclass(frozen=True)
class LinAtom:
    """x <= y + c, where x and y are index variables or the constant 0."""

    x: str | None
    y: str | None
    c: int

    def satisfied(self, assign: Mapping[str, int]) -> bool:
        xv = 0 if self.x is None else assign[self.x]
        yv = 0 if self.y is None else assign[self.y]
        return xv <= yv + self.c

    def sort_key(self):
        return (self.x or "", self.y or "", self.c)

    def __str__(self) -> str:
        if self.x is None:
            return f"{-self.c} <= {self.y}"
        if self.y is None:
            return f"{self.x} <= {self.c}"
        if self.c == -1:
            return f"{self.x} < {self.y}"
        if self.c == 0:
            return f"{self.x} <= {self.y}"
        return f"{self.x} <= {self.y}{self.c:+d}"


_EXCL_RE = re.compile(r"^\(([^)]*)\)\s*!=\s*\(([^)]*)\)$")


@dataclass(frozen=True)
class Constraints:
    atoms: frozenset[LinAtom] = frozenset()
    exclusions: frozenset[tuple[tuple[str, ...], tuple[int, ...]]] = frozenset()

    @staticmethod
    def parse(where: str = "", exclude: str = "") -> "Constraints":
        atoms: set[LinAtom] = set()
        for clause in where.split(";"):
            clause = clause.strip()
            if clause:
                atoms |= set(_parse_chain(clause))
        excl: set = set()
        for clause in exclude.split(";"):
            clause = clause.strip()
            if not clause:
                continue
            m = _EXCL_RE.match(clause)
            if m is None:
                raise MalformedSchemaError(f"cannot parse exclusion {clause!r}")
            vars_ = tuple(v.strip() for v in m.group(1).split(","))
            vals = tuple(int(v) for v in m.group(2).split(","))
            if len(vars_) != len(vals):
                raise MalformedSchemaError(f"mismatched exclusion {clause!r}")
            excl.add((vars_, vals))
        return Constraints(frozenset(atoms), frozenset(excl))

    def satisfied(self, assign: Mapping[str, int]) -> bool:
        if not all(a.satisfied(assign) for a in self.atoms):
            return False
        for vars_, vals in self.exclusions:
            if all(assign.get(v, 0) == val for v, val in zip(vars_, vals)):
                return False
        return True

    def rename(self, table: Mapping[str, str]) -> "Constraints":
        def rn(v):
            return None if v is None else table[v]

        return Constraints(
            frozenset(LinAtom(rn(a.x), rn(a.y), a.c) for a in self.atoms),
            frozenset(
                (tuple(table[v] for v in vars_), vals)
                for vars_, vals in self.exclusions
            ),
        )

    @property
    def vars(self) -> set[str]:
        out: set[str] = set()
        for a in self.atoms:
            out |= {v for v in (a.x, a.y) if v is not None}
        for vars_, _ in self.exclusions:
            out |= set(vars_)
        return out

    def render(self) -> tuple[list[str], list[str]]:
        atoms = [str(a) for a in sorted(self.atoms, key=LinAtom.sort_key)]
        excl = [
            f"({','.join(vars_)}) != ({','.join(str(v) for v in vals)})"
            for vars_, vals in sorted(self.exclusions)
        ]
        return atoms, excl

    def __str__(self) -> str:
        atoms, excl = self.render()
        return "; ".join(atoms + excl)


def _parse_side(text: str) -> tuple[str | None, int]:
    text = text.strip()
    if re.fullmatch(r"-?\d+", text):
        return None, int(text)
    m = re.fullmatch(r"([a-z]\w*)\s*([+-]\s*\d+)?", text)
    if m is None:
        raise MalformedSchemaError(f"cannot parse constraint side {text!r}")
    off = int(m.group(2).replace(" ", "")) if m.group(2) else 0
    return m.group(1), off


def _parse_chain(clause: str) -> Iterable[LinAtom]:
    parts = re.split(r"(<=|<|>=|>)", clause)
    if len(parts) < 3 or len(parts) % 2 == 0:
        raise MalformedSchemaError(f"cannot parse constraint {clause!r}")
    for i in range(0, len(parts) - 2, 2):
        lhs, op, rhs = parts[i], parts[i + 1], parts[i + 2]
        if op in (">", ">="):
            lhs, rhs = rhs, lhs
            op = "<" if op == ">" else "<="
        xv, xo = _parse_side(lhs)
        yv, yo = _parse_side(rhs)
        c = yo - xo - (1 if op == "<" else 0)
        if xv is None and yv is None:
            if 0 <= c:
                continue  # trivially true constant atom
            raise MalformedSchemaError(f"unsatisfiable constraint {clause!r}")
        if xv is None and c >= 0:
            continue  # 0 <= y + c with c >= 0 is implied by y >= 0
        yield LinAtom(xv, yv, c)


# ---------------------------------------------------------------------------
# Term schemas

@dataclass(frozen=True)
class TermSchema:
    output: MonomialPattern
    inputs: tuple[MonomialPattern, ...] = ()
    constraints: Constraints = field(default_factory=Constraints)

    @property
    def arity(self) -> int:
        """The i of the delta-operation this family feeds (1 + #inputs)."""
        return 1 + len(self.inputs)

    @property
    def vars(self) -> tuple[str, ...]:
        seen: list[str] = []
        for pat in (self.output, *self.inputs):
            for v in pat.vars:
                if v not in seen:
                    seen.append(v)
        for v in sorted(self.constraints.vars):
            if v not in seen:
                seen.append(v)
        return tuple(seen)

    def canonical(self) -> tuple:
        """Hashable normal form, invariant under index renaming."""
        table = {v: f"i{k}" for k, v in enumerate(self.vars)}
        out = self.output.rename(table)
        ins = tuple(p.rename(table) for p in self.inputs)
        cons = self.constraints.rename(table)
        return (
            out,
            ins,
            tuple(sorted(cons.atoms, key=LinAtom.sort_key)),
            tuple(sorted(cons.exclusions)),
        )

    def __str__(self) -> str:
        body = str(self.output)
        if self.inputs:
            body += " (x) (" + ", ".join(str(p) for p in self.inputs) + ")"
        cons = str(self.constraints)
        return f"{body} [{cons}]" if cons else body


def schema(output: str, inputs: Sequence[str] = (), where: str = "", exclude: str = "") -> TermSchema:
    """Shorthand constructor used by the built-in tables."""
    return TermSchema(
        MonomialPattern.parse(output),
        tuple(MonomialPattern.parse(s) for s in inputs),
        Constraints.parse(where, exclude),
    )
