"""Box tensor product of two DA bimodules in matrix notation.

The primary matrix of X (x) Y is the matrix product of the primary
matrices (Cartesian products of entry sets, so generators are pairs
(x, y) with right(x) = left(y)).  A secondary-matrix term of the
product arises from a term a (x) (b_1, ..., b_{i-1}) of X together with
a chain y = y_1, ..., y_i of Y-generators where step j consumes b_j:
a Y-term in row y_{j+1}, column y_j whose algebra output equals b_j.
The resulting term is a (x) (concatenated inputs of the chain steps);
input-free X-terms pass through unchanged along y = y'.

Chains may use input-free Y-terms (they consume no inputs but still
produce an output) and, through the materialized unit terms of X,
Y-terms whose output is an idempotent.  Everything is computed
concretely below a degree bound on the output of the X-term, which also
bounds the output of every resulting term.
"""

from __future__ import annotations

from dataclasses import dataclass
from .algebra import BasisMonomial, intrinsic_degree, unit
from .engine import (
    ConcreteTerm,
    DABimodule,
    DAGenerator,
    RelationReport,
    check_instances,
    instantiate_cell,
)


@dataclass
class ConcreteDABimodule:
    """A DA bimodule with fully instantiated cells, valid up to a bound."""

    name: str
    generators: tuple[DAGenerator, ...]
    cells: dict[tuple[str, str], frozenset[ConcreteTerm]]
    bound: int

    def __post_init__(self):
        self._by_name = {g.name: g for g in self.generators}
        self.cells = {k: frozenset(v) for k, v in self.cells.items() if v}

    def generator(self, name: str) -> DAGenerator:
        return self._by_name[name]

    def terms(self, row: str, col: str) -> frozenset[ConcreteTerm]:
        return self.cells.get((row, col), frozenset())

    def restricted(self, bound: int) -> "ConcreteDABimodule":
        if bound > self.bound:
            raise ValueError(f"{self.name} was built at bound {self.bound} < {bound}")
        cells = {
            k: frozenset(t for t in v if intrinsic_degree(t.output) <= bound)
            for k, v in self.cells.items()
        }
        return ConcreteDABimodule(self.name, self.generators, cells, bound)


def primary_product(X: DABimodule, Y: DABimodule) -> list[DAGenerator]:
    """Generators (x,y) with right(x) = left(y), in row-major order."""
    if X.right_algebra != Y.left_algebra:
        raise ValueError(
            f"cannot pair {X.name} over (..,{X.right_algebra}) with "
            f"{Y.name} over ({Y.left_algebra},..)"
        )
    out = []
    for x in X.generators:
        for y in Y.generators:
            if x.right == y.left:
                out.append(DAGenerator(f"({x.name},{y.name})", x.left, y.right))
    return out


def instantiate_reference(bim: DABimodule, bound: int) -> ConcreteDABimodule:
    """Instantiate a schema bimodule cell by cell (output degree <= bound)."""
    cells = {}
    for r in bim.generators:
        for c in bim.generators:
            terms = instantiate_cell(bim, r.name, c.name, bound)
            if terms:
                cells[(r.name, c.name)] = frozenset(terms)
    return ConcreteDABimodule(bim.name, tuple(bim.generators), cells, bound)


def secondary_product(X: DABimodule, Y: DABimodule, bound: int) -> ConcreteDABimodule:
    """The box tensor product X (x) Y with output degree <= bound."""
    generators = tuple(primary_product(X, Y))  # also checks the algebra pairing
    y_by_left: dict[str, list[DAGenerator]] = {}
    for y in Y.generators:
        y_by_left.setdefault(y.left, []).append(y)

    # X instances, unit terms included (they pick up Y-terms with
    # idempotent outputs, which produce real product terms).
    x_cells: dict[tuple[str, str], list[ConcreteTerm]] = {}
    max_input_deg = 0
    for r in X.generators:
        for c in X.generators:
            terms = instantiate_cell(
                X, r.name, c.name, bound, include_unital=True
            )
            if terms:
                x_cells[(r.name, c.name)] = sorted(terms, key=ConcreteTerm.sort_key)
                for t in terms:
                    for b in t.inputs:
                        max_input_deg = max(max_input_deg, intrinsic_degree(b))

    # Y-term lookup: (column generator, output monomial) -> [(row, inputs)]
    matches: dict[tuple[str, BasisMonomial], list[tuple[str, tuple[BasisMonomial, ...]]]] = {}
    for r in Y.generators:
        for c in Y.generators:
            for t in instantiate_cell(
                Y, r.name, c.name, max_input_deg, include_unital=True
            ):
                matches.setdefault((c.name, t.output), []).append((r.name, t.inputs))

    cells: dict[tuple[str, str], set[ConcreteTerm]] = {}

    def emit(row: str, col: str, term: ConcreteTerm) -> None:
        cell = cells.setdefault((row, col), set())
        cell ^= {term}

    for (x_row, x_col), terms in x_cells.items():
        right_of_col = X.generator(x_col).right
        for t in terms:
            if not t.inputs:
                for y in y_by_left.get(right_of_col, ()):
                    emit(f"({x_row},{y.name})", f"({x_col},{y.name})", t)
                continue
            for y1 in y_by_left.get(right_of_col, ()):
                # depth-first chain search consuming t.inputs in order
                stack = [(y1.name, 0, ())]
                while stack:
                    here, j, acc = stack.pop()
                    if j == len(t.inputs):
                        emit(
                            f"({x_row},{here})",
                            f"({x_col},{y1.name})",
                            ConcreteTerm(t.output, acc),
                        )
                        continue
                    for nxt, inputs in matches.get((here, t.inputs[j]), ()):
                        stack.append((nxt, j + 1, acc + inputs))

    # unit terms of X times unit terms of Y reproduce the product's own
    # implicit unit terms; drop them from the concrete cells
    for g in generators:
        key = (g.name, g.name)
        if key in cells:
            cells[key] -= {ConcreteTerm(unit(g.left), (unit(g.right),))}

    named = {g.name for g in generators}
    for (r, c) in cells:
        if r not in named or c not in named:
            raise AssertionError(f"product term emitted outside primary matrix: {(r, c)}")

    return ConcreteDABimodule(
        f"{X.name}(x){Y.name}",
        generators,
        {k: frozenset(v) for k, v in cells.items() if v},
        bound,
    )


def check_concrete(M: ConcreteDABimodule, bound: int) -> RelationReport:
    """DA relation check on a concrete bimodule, sizes up to the bound."""
    if bound > M.bound:
        raise ValueError(f"{M.name} was built at bound {M.bound} < {bound}")
    inst: dict[tuple[str, str], list[ConcreteTerm]] = {}
    for (r, c), terms in M.cells.items():
        kept = [t for t in terms if t.size() <= bound]
        if kept:
            inst[(r, c)] = sorted(kept, key=ConcreteTerm.sort_key)
    for g in M.generators:
        key = (g.name, g.name)
        extra = ConcreteTerm(unit(g.left), (unit(g.right),))
        inst.setdefault(key, [])
        inst[key] = sorted(set(inst[key]) | {extra}, key=ConcreteTerm.sort_key)
    return check_instances(M.name, M.generators, inst, bound)


def diff_concrete(A: ConcreteDABimodule, B: ConcreteDABimodule) -> list[str]:
    """Term-level differences between two concrete bimodules."""
    out = []
    gens_a = [(g.name, g.left, g.right) for g in A.generators]
    gens_b = [(g.name, g.left, g.right) for g in B.generators]
    if gens_a != gens_b:
        out.append(f"generators differ: {gens_a} vs {gens_b}")
        return out
    for key in sorted(set(A.cells) | set(B.cells)):
        only_a = A.terms(*key) - B.terms(*key)
        only_b = B.terms(*key) - A.terms(*key)
        for t in sorted(only_a, key=ConcreteTerm.sort_key):
            out.append(f"cell {key}: only in {A.name}: {t}")
        for t in sorted(only_b, key=ConcreteTerm.sort_key):
            out.append(f"cell {key}: only in {B.name}: {t}")
    return out
