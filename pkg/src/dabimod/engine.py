"""Generic DA bimodules in matrix notation, and the relation checker.

A bimodule is a finite generator list (the primary matrix, one generator
per entry) plus a secondary matrix: a map (row generator, column
generator) -> set of TermSchema.  Row/column conventions follow the
delta-operation semantics: a term ``a (x) (b_1, ..., b_{i-1})`` in row y
and column x means that ``a (x) y`` is a summand of
``delta_i(x, b_1, ..., b_{i-1})``.

The relation checker materializes the strict-unitality terms
``Id (x) (Id)`` on the diagonal, squares the secondary matrix with the
entry product

    (a (x) bs) . (a' (x) bs') = a'a (x) (bs' + bs)

and adds the multiplication matrix (every way of splitting one input as
a product of two basis elements, idempotent factors included).  The F2
sum must vanish.  Terms are graded by total intrinsic degree
(output plus inputs); every production step is degree-homogeneous, so
each degree slice up to the bound is checked exactly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Sequence

from .algebra import (
    BasisMonomial,
    idem_weight,
    intrinsic_degree,
    letter_endpoints,
    multiply_monomials,
    split_pairs,
    unit,
)
from .schema import MalformedSchemaError, TermSchema


@dataclass(frozen=True, order=True)
class DAGenerator:
    """One primary-matrix entry."""

    name: str
    left: str
    right: str
    bidegree: tuple[int, int] | None = None


class ConcreteTerm(NamedTuple):
    """One fully instantiated secondary-matrix term."""

    output: BasisMonomial
    inputs: tuple[BasisMonomial, ...]

    def size(self) -> int:
        return intrinsic_degree(self.output) + sum(
            intrinsic_degree(b) for b in self.inputs
        )

    def sort_key(self):
        return (
            self.size(),
            len(self.inputs),
            self.output.sort_key(),
            tuple(b.sort_key() for b in self.inputs),
        )

    def __str__(self) -> str:
        if not self.inputs:
            return str(self.output)
        return f"{self.output} (x) ({', '.join(str(b) for b in self.inputs)})"


@dataclass
class DABimodule:
    """A DA bimodule given by schemas; both algebra handles are B(2) here."""

    name: str
    generators: tuple[DAGenerator, ...]
    cells: dict[tuple[str, str], tuple[TermSchema, ...]]
    strictly_unital: bool = True
    left_algebra: str = "B2"
    right_algebra: str = "B2"

    def __post_init__(self):
        self._by_name = {g.name: g for g in self.generators}
        if len(self._by_name) != len(self.generators):
            raise ValueError(f"duplicate generator names in {self.name}")
        self.cells = {
            key: tuple(schemas) for key, schemas in self.cells.items() if schemas
        }
        for (row, col) in self.cells:
            if row not in self._by_name or col not in self._by_name:
                raise ValueError(f"cell ({row},{col}) names unknown generators")

    def generator(self, name: str) -> DAGenerator:
        return self._by_name[name]

    def schemas(self, row: str, col: str) -> tuple[TermSchema, ...]:
        return self.cells.get((row, col), ())

    def validate(self) -> None:
        """Check idempotent chaining and enumerability of every schema."""
        for (row, col), schemas in self.cells.items():
            r, c = self._by_name[row], self._by_name[col]
            for s in schemas:
                chain_idempotents(s, r, c)
                if not s.inputs:
                    if s.vars:
                        raise MalformedSchemaError(
                            f"{self.name}[{row},{col}]: input-free family "
                            f"{s} has index variables"
                        )
                else:
                    bound_in_inputs = set()
                    for pat in s.inputs:
                        bound_in_inputs.update(pat.vars)
                    missing = [v for v in s.vars if v not in bound_in_inputs]
                    if missing:
                        raise MalformedSchemaError(
                            f"{self.name}[{row},{col}]: {s} is not finite per "
                            f"input sequence (free in {missing})"
                        )

    def drop_schema(self, row: str, col: str, index: int) -> "DABimodule":
        """Copy with one schema removed; used for negative controls."""
        cells = dict(self.cells)
        old = list(cells[(row, col)])
        del old[index]
        cells[(row, col)] = tuple(old)
        return DABimodule(
            f"{self.name}-drop({row},{col},{index})",
            self.generators,
            cells,
            self.strictly_unital,
        )


# ---------------------------------------------------------------------------
# Anchoring and instantiation

def chain_idempotents(s: TermSchema, row: DAGenerator, col: DAGenerator) -> tuple[str, ...]:
    """Left idempotents of (output, input_1, ...), or raise if they don't chain."""
    anchors = [col.left]
    _step(s.output.letter, col.left, row.left, f"output of {s}")
    at = col.right
    for j, pat in enumerate(s.inputs):
        anchors.append(at)
        want = row.right if j == len(s.inputs) - 1 else None
        at = _step(pat.letter, at, want, f"input {j + 1} of {s}")
    if not s.inputs and col.right != row.right:
        raise MalformedSchemaError(
            f"input-free {s} needs matching right idempotents "
            f"({col.right} vs {row.right})"
        )
    return tuple(anchors)


def _step(letter: str, left: str, want_right: str | None, what: str) -> str:
    if letter == "Id":
        right = left
    else:
        ends = letter_endpoints(letter, idem_weight(left))
        if ends is None or ends[0] != left:
            raise MalformedSchemaError(f"{what}: letter {letter} has no source {left}")
        right = ends[1]
    if want_right is not None and right != want_right:
        raise MalformedSchemaError(
            f"{what}: chain reaches {right}, expected {want_right}"
        )
    return right


def _measure(s: TermSchema, output_only: bool) -> tuple[int, dict[str, int]]:
    const, coeffs = s.output.degree_expr()
    if not output_only:
        for pat in s.inputs:
            c2, coeffs2 = pat.degree_expr()
            const += c2
            for v, c in coeffs2.items():
                coeffs[v] = coeffs.get(v, 0) + c
    return const, coeffs


def _var_bounds(s: TermSchema, bound: int, output_only: bool) -> dict[str, int] | None:
    """Upper bound per index variable under the degree bound; None = empty."""
    base, coeffs = _measure(s, output_only)
    if base > bound:
        return None
    bounds: dict[str, int] = {}
    for v in s.vars:
        if coeffs.get(v, 0) > 0:
            bounds[v] = (bound - base) // coeffs[v]
    changed = True
    while changed:
        changed = False
        for a in s.constraints.atoms:
            if a.x is not None and a.x not in bounds:
                if a.y is None:
                    bounds[a.x] = a.c
                    changed = True
                elif a.y in bounds:
                    bounds[a.x] = bounds[a.y] + a.c
                    changed = True
    missing = [v for v in s.vars if v not in bounds]
    if missing:
        raise MalformedSchemaError(
            f"family {s} is unbounded at fixed degree (free index {missing})"
        )
    return bounds


def instantiate_schema(
    s: TermSchema,
    row: DAGenerator,
    col: DAGenerator,
    bound: int,
    output_only: bool = True,
) -> Iterable[ConcreteTerm]:
    """All instances with (output or total) intrinsic degree <= bound.

    Instances whose output or inputs are zero in B(2) contribute no term
    and are skipped; inputs are checked to never be idempotents (strict
    unitality).
    """
    anchors = chain_idempotents(s, row, col)
    bounds = _var_bounds(s, bound, output_only)
    if bounds is None:
        return
    var_list = list(s.vars)
    for values in itertools.product(*(range(bounds[v] + 1) for v in var_list)):
        assign = dict(zip(var_list, values))
        if not s.constraints.satisfied(assign):
            continue
        term = _instantiate_at(s, anchors, assign)
        if term is None:
            continue
        measure = (
            intrinsic_degree(term.output) if output_only else term.size()
        )
        if measure > bound:
            continue
        yield term


def _instantiate_at(
    s: TermSchema, anchors: tuple[str, ...], assign: Mapping[str, int]
) -> ConcreteTerm | None:
    mono: list[BasisMonomial] = []
    for pat, left in zip((s.output, *s.inputs), anchors):
        e1 = pat.e1.evaluate(assign)
        e2 = pat.e2.evaluate(assign)
        if e1 < 0 or e2 < 0:
            raise MalformedSchemaError(
                f"{s} instantiates to a negative exponent at {dict(assign)}"
            )
        right = _step(pat.letter, left, None, "pattern")
        try:
            m = BasisMonomial(left, right, pat.letter, e1, e2)
        except ValueError:
            return None  # the instance is zero in B(2)
        mono.append(m)
    for b in mono[1:]:
        if b.is_idempotent():
            raise MalformedSchemaError(
                f"{s} instantiates an idempotent input at {dict(assign)}"
            )
    return ConcreteTerm(mono[0], tuple(mono[1:]))


def instantiate_cell(
    bim: DABimodule,
    row: str,
    col: str,
    bound: int,
    output_only: bool = True,
    include_unital: bool = False,
) -> set[ConcreteTerm]:
    """Concrete terms of one cell, folded over F2."""
    r, c = bim.generator(row), bim.generator(col)
    acc: set[ConcreteTerm] = set()
    for s in bim.schemas(row, col):
        for term in instantiate_schema(s, r, c, bound, output_only):
            acc ^= {term}
    if include_unital and bim.strictly_unital and row == col:
        acc ^= {ConcreteTerm(unit(r.left), (unit(r.right),))}
    return acc


# ---------------------------------------------------------------------------
# Delta evaluation

def evaluate_delta(
    bim: DABimodule, x: str, inputs: Sequence[BasisMonomial]
) -> set[tuple[BasisMonomial, str]]:
    """Exact delta_{1+len(inputs)}(x, inputs) as a set of (a, y) pairs."""
    gen = bim.generator(x)
    inputs = tuple(inputs)
    out: set[tuple[BasisMonomial, str]] = set()
    if bim.strictly_unital and len(inputs) == 1 and inputs[0] == unit(gen.right):
        out ^= {(unit(gen.left), x)}
    if any(b.is_idempotent() for b in inputs):
        return out  # strict unitality: no schema carries idempotent inputs
    for row in bim.generators:
        for s in bim.schemas(row.name, x):
            if len(s.inputs) != len(inputs):
                continue
            for term in _match_schema(s, row, gen, inputs):
                out ^= {(term.output, row.name)}
    return out


def _match_schema(
    s: TermSchema, row: DAGenerator, col: DAGenerator, inputs: tuple[BasisMonomial, ...]
) -> Iterable[ConcreteTerm]:
    anchors = chain_idempotents(s, row, col)
    for pat, b, left in zip(s.inputs, inputs, anchors[1:]):
        if pat.letter != b.letter or b.left != left:
            return
    cap = max((max(b.e1, b.e2) for b in inputs), default=0)
    var_list = list(s.vars)
    for values in itertools.product(*(range(cap + 1) for _ in var_list)):
        assign = dict(zip(var_list, values))
        if any(
            pat.e1.evaluate(assign) != b.e1 or pat.e2.evaluate(assign) != b.e2
            for pat, b in zip(s.inputs, inputs)
        ):
            continue
        if not s.constraints.satisfied(assign):
            continue
        term = _instantiate_at(s, anchors, assign)
        if term is not None and term.inputs == inputs:
            yield term


# ---------------------------------------------------------------------------
# The DA relation check

@dataclass(frozen=True)
class RelationFailure:
    row: str
    col: str
    term: ConcreteTerm

    def __str__(self) -> str:
        return (
            f"[{self.row}, {self.col}] degree {self.term.size()}: {self.term}"
        )


@dataclass
class RelationReport:
    name: str
    bound: int
    failures: tuple[RelationFailure, ...]
    cells_checked: int
    terms_seen: int

    @property
    def ok(self) -> bool:
        return not self.failures

    def __str__(self) -> str:
        head = (
            f"{self.name}: DA relations "
            f"{'PASS' if self.ok else 'FAIL'} up to degree {self.bound} "
            f"({self.cells_checked} cells, {self.terms_seen} terms)"
        )
        lines = [head] + [f"  non-cancelling {f}" for f in self.failures]
        return "\n".join(lines)


def materialize(bim: DABimodule, bound: int) -> dict[tuple[str, str], list[ConcreteTerm]]:
    """All secondary-matrix instances of total degree <= bound, unital included."""
    out: dict[tuple[str, str], list[ConcreteTerm]] = {}
    for g in bim.generators:
        for h in bim.generators:
            terms = instantiate_cell(
                bim, g.name, h.name, bound, output_only=False, include_unital=True
            )
            if terms:
                out[(g.name, h.name)] = sorted(terms, key=ConcreteTerm.sort_key)
    return out


def check_instances(
    name: str,
    generators: Sequence[DAGenerator],
    inst: Mapping[tuple[str, str], list[ConcreteTerm]],
    bound: int,
) -> RelationReport:
    """Squared secondary matrix + multiplication matrix == 0, degreewise."""
    acc: dict[tuple[str, str], set[ConcreteTerm]] = {}
    terms_seen = sum(len(v) for v in inst.values())

    by_row: dict[str, list[tuple[str, list[ConcreteTerm]]]] = {}
    for (r, c), terms in inst.items():
        by_row.setdefault(r, []).append((c, terms))

    # squared secondary matrix
    for (r, m), uterms in inst.items():
        for c, vterms in by_row.get(m, ()):
            target = acc.setdefault((r, c), set())
            for u in uterms:
                u_size = u.size()
                if u_size > bound:
                    break  # uterms sorted by size
                room = bound - u_size
                for v in vterms:
                    if v.size() > room:
                        break
                    prod = multiply_monomials(v.output, u.output)
                    if prod is None:
                        continue
                    target ^= {ConcreteTerm(prod, v.inputs + u.inputs)}

    # multiplication matrix
    for (r, c), terms in inst.items():
        target = acc.setdefault((r, c), set())
        for t in terms:
            for j, b in enumerate(t.inputs):
                for b1, b2 in split_pairs(b):
                    target ^= {
                        ConcreteTerm(
                            t.output, t.inputs[:j] + (b1, b2) + t.inputs[j + 1:]
                        )
                    }

    failures = [
        RelationFailure(r, c, t)
        for (r, c), terms in sorted(acc.items())
        for t in sorted(terms, key=ConcreteTerm.sort_key)
        if t.size() <= bound
    ]
    return RelationReport(
        name=name,
        bound=bound,
        failures=tuple(failures),
        cells_checked=len(generators) ** 2,
        terms_seen=terms_seen,
    )


def check_da_relations(bim: DABimodule, bound: int) -> RelationReport:
    bim.validate()
    return check_instances(bim.name, bim.generators, materialize(bim, bound), bound)


# ---------------------------------------------------------------------------
# Bidegree inference

@dataclass
class BidegreeResult:
    assignment: dict[str, tuple[int, int]] | None
    witness: str | None = None

    @property
    def ok(self) -> bool:
        return self.assignment is not None


def cell_offsets(bim: DABimodule) -> dict[tuple[str, str], tuple[int, int]] | str:
    """Per-cell (intrinsic, homological) offset deg(row) - deg(col).

    Every schema in a cell must force the same offset; the offset of a
    family a (x) (b_1, ...) is (sum deg b_j - deg a, #inputs - 1).
    """
    offsets: dict[tuple[str, str], tuple[int, int]] = {}
    for (row, col), schemas in bim.cells.items():
        for s in schemas:
            const, coeffs = s.output.degree_expr()
            d_int = -const
            d_coeffs = {v: -c for v, c in coeffs.items()}
            for pat in s.inputs:
                c2, coeffs2 = pat.degree_expr()
                d_int += c2
                for v, c in coeffs2.items():
                    d_coeffs[v] = d_coeffs.get(v, 0) + c
            if any(d_coeffs.values()):
                return (
                    f"cell ({row},{col}) family {s}: degree offset varies "
                    f"with {sorted(v for v, c in d_coeffs.items() if c)}"
                )
            offset = (d_int, len(s.inputs) - 1)
            prev = offsets.get((row, col))
            if prev is not None and prev != offset:
                return (
                    f"cell ({row},{col}): families force offsets {prev} and {offset}"
                )
            offsets[(row, col)] = offset
    return offsets


def infer_bidegrees(bim: DABimodule) -> BidegreeResult:
    """Solve the bidegree constraint system, pinning one generator per
    connected component to (0,0)."""
    offsets = cell_offsets(bim)
    if isinstance(offsets, str):
        return BidegreeResult(None, offsets)
    adj: dict[str, list[tuple[str, int, int]]] = {g.name: [] for g in bim.generators}
    for (row, col), (di, dh) in offsets.items():
        adj[row].append((col, -di, -dh))  # deg(col) = deg(row) - offset
        adj[col].append((row, di, dh))
    assignment: dict[str, tuple[int, int]] = {}
    for g in bim.generators:
        if g.name in assignment:
            continue
        assignment[g.name] = (0, 0)
        queue = [g.name]
        while queue:
            here = queue.pop()
            hi, hh = assignment[here]
            for (other, di, dh) in adj[here]:
                cand = (hi + di, hh + dh)
                if other not in assignment:
                    assignment[other] = cand
                    queue.append(other)
                elif assignment[other] != cand:
                    return BidegreeResult(
                        None,
                        f"inconsistent cycle at {other}: "
                        f"{assignment[other]} vs {cand} via {here}",
                    )
    return BidegreeResult(assignment)


def scan_bidegrees(
    bim: DABimodule, assignment: Mapping[str, tuple[int, int]], bound: int
) -> list[str]:
    """Verify every instantiated term is bidegree-preserving; return violations."""
    bad: list[str] = []
    for (row, col) in bim.cells:
        ri, rh = assignment[row]
        ci, ch = assignment[col]
        for term in instantiate_cell(bim, row, col, bound, output_only=True):
            lhs = intrinsic_degree(term.output) + ri
            rhs = ci + sum(intrinsic_degree(b) for b in term.inputs)
            if lhs != rhs or rh != ch + len(term.inputs) - 1:
                bad.append(f"[{row},{col}] {term}")
    return bad
