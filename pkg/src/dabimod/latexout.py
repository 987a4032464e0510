"""LaTeX output: bordered secondary matrices with family fitting.

Computed cells hold explicit term lists; for display we try to fit each
cell back onto one- or two-parameter affine families (so that e.g. the
instances U1 (x) R2, U1^2 (x) R2*U2, ... print as
``U_1^{k+1} \\otimes R_2U_2^{k}``).  A fit is accepted only if
regenerating the family below the construction bound reproduces the
term set exactly; otherwise the explicit list is printed.
"""

from __future__ import annotations

from typing import Sequence

from .algebra import BasisMonomial
from .boxtensor import ConcreteDABimodule
from .engine import ConcreteTerm


def latex_monomial(m: BasisMonomial) -> str:
    return _latex_letter_exps(m.letter, m.e1, m.e2)


_LATEX_LETTERS = {
    "Id": "",
    "R1": "R_1",
    "L1": "L_1",
    "R2": "R_2",
    "L2": "L_2",
    "R2R1": "R_2R_1",
    "L1L2": "L_1L_2",
}


def _pow(base: str, exp) -> str:
    if isinstance(exp, str) and exp.isdigit():
        exp = int(exp)
    if isinstance(exp, int):
        if exp == 0:
            return ""
        if exp == 1:
            return base
        return f"{base}^{{{exp}}}"
    return f"{base}^{{{exp}}}"  # symbolic exponent string


def _latex_letter_exps(letter: str, e1, e2) -> str:
    body = _LATEX_LETTERS[letter] + _pow("U_1", e1) + _pow("U_2", e2)
    return body if body else "1"


def latex_generator(name: str) -> str:
    def one(token: str) -> str:
        if "_" in token:
            head, sub = token.split("_", 1)
            return f"{head}_{{{sub}}}"
        return token

    if name.startswith("(") and name.endswith(")"):
        return " ".join(one(t) for t in name[1:-1].split(","))
    return one(name)


def _exp_affine(values: Sequence[int], params: Sequence[tuple[str, Sequence[int]]]):
    """Fit values = c0 + sum(coeff * param values); return string or None."""
    n = len(values)
    if not params:
        return str(values[0]) if all(v == values[0] for v in values) else None
    if len(params) == 1:
        name, pv = params[0]
        for coeff in (0, 1, 2):
            diffs = {values[i] - coeff * pv[i] for i in range(n)}
            if len(diffs) == 1:
                c0 = diffs.pop()
                if c0 < 0:
                    continue
                if coeff == 0:
                    return str(c0)
                head = name if coeff == 1 else f"{coeff}{name}"
                return head if c0 == 0 else f"{head}+{c0}"
        return None
    # two parameters: coefficients in {0,1,2} each
    (n1, p1), (n2, p2) = params
    for a in (0, 1, 2):
        for b in (0, 1, 2):
            diffs = {values[i] - a * p1[i] - b * p2[i] for i in range(len(values))}
            if len(diffs) == 1:
                c0 = diffs.pop()
                if c0 < 0:
                    continue
                parts = []
                if a:
                    parts.append(n1 if a == 1 else f"{a}{n1}")
                if b:
                    parts.append(n2 if b == 1 else f"{b}{n2}")
                if c0 or not parts:
                    parts.append(str(c0))
                return "+".join(parts)
    return None


def _letters_of(t: ConcreteTerm) -> tuple[str, ...]:
    return (t.output.letter,) + tuple(b.letter for b in t.inputs)


def _vectors(t: ConcreteTerm) -> tuple[int, ...]:
    out = [t.output.e1, t.output.e2]
    for b in t.inputs:
        out += [b.e1, b.e2]
    return tuple(out)


def _family_latex(letters, exps, excluded) -> str:
    body = _latex_letter_exps(letters[0], exps[0], exps[1])
    ins = [
        _latex_letter_exps(letters[1 + j], exps[2 + 2 * j], exps[3 + 2 * j])
        for j in range(len(letters) - 1)
    ]
    if ins:
        if len(ins) == 1:
            body += r" \otimes " + ins[0]
        else:
            body += r" \otimes (" + ", ".join(ins) + ")"
    if excluded:
        body += r" \ [(k,l) \neq (0,0)]"
    return body


def fit_cell(terms: frozenset[ConcreteTerm], bound: int) -> list[str] | None:
    """LaTeX strings for the fitted families of one cell, or None."""
    groups: dict[tuple[str, ...], list[ConcreteTerm]] = {}
    for t in terms:
        groups.setdefault(_letters_of(t), []).append(t)
    out = []
    for letters in sorted(groups):
        fitted = _fit_group(letters, groups[letters], bound)
        if fitted is None:
            return None
        out.append(fitted)
    return out


def _fit_group(letters, terms: list[ConcreteTerm], bound: int) -> str | None:
    terms = sorted(terms, key=ConcreteTerm.sort_key)
    vecs = [_vectors(t) for t in terms]
    fitted = _fit_vectors(letters, vecs, bound)
    if fitted is not None:
        return fitted
    # several interleaved families in one cell: split by the support
    # pattern of the exponent vector and fit each part separately
    parts: dict[tuple[bool, ...], list] = {}
    for v in vecs:
        parts.setdefault(tuple(e > 0 for e in v), []).append(v)
    if len(parts) > 1:
        pieces = []
        for key in sorted(parts):
            piece = _fit_vectors(letters, parts[key], bound)
            if piece is None:
                pieces = None
                break
            pieces.append(piece)
        if pieces:
            return " + ".join(pieces)
    if len(terms) <= 4:
        return r" + ".join(_family_latex(letters, v, False) for v in vecs)
    return None


def _fit_vectors(letters, vecs, bound: int) -> str | None:
    ncoord = len(vecs[0])
    for params in _parameter_candidates(vecs):
        exps = []
        okay = True
        for i in range(ncoord):
            fitted = _exp_affine([v[i] for v in vecs], params)
            if fitted is None:
                okay = False
                break
            exps.append(fitted)
        if not okay:
            continue
        excluded = _verify_fit(letters, vecs, params, bound)
        if excluded is not None:
            return _family_latex(letters, exps, excluded)
    return None


def _parameter_candidates(vecs):
    """Plausible (name, value-vector) parametrizations of the instances."""
    n = len(vecs)
    ncoord = len(vecs[0])
    base = min(vecs)
    sizes = [sum(v) - sum(base) for v in vecs]
    cands = []
    if len({tuple(v) for v in vecs}) == 1:
        cands.append([])
    if len(set(sizes)) == n:
        for scale in (1, 2):
            vals = [s // scale for s in sizes]
            if all(s % scale == 0 for s in sizes):
                cands.append([("k", vals)])
    # two-parameter: use the first two coordinates that vary independently
    for i in range(ncoord):
        for j in range(i + 1, ncoord):
            ki = [v[i] for v in vecs]
            kj = [v[j] for v in vecs]
            if len({(a, b) for a, b in zip(ki, kj)}) == n:
                cands.append([("k", ki), ("l", kj)])
                cands.append([("l", ki), ("k", kj)])
    return cands


def _verify_fit(letters, vecs, params, bound) -> bool | None:
    """Check the fit regenerates exactly the instances below the bound.

    Returns the excluded-origin flag, or None if the fit is wrong.
    """
    have = {tuple(v) for v in vecs}
    if not params:
        return (False) if len(have) == 1 else None
    names = [p[0] for p in params]
    solved: dict[tuple[int, ...], tuple[int, ...]] = {}
    for idx, v in enumerate(vecs):
        key = tuple(p[1][idx] for p in params)
        if solved.setdefault(key, tuple(v)) != tuple(v):
            return None
    # affine model from two/three instances
    keys = sorted(solved)
    base_key, base_val = keys[0], solved[keys[0]]
    steps = []
    for axis in range(len(names)):
        probe = next(
            (k for k in keys if k[axis] == base_key[axis] + 1
             and all(k[o] == base_key[o] for o in range(len(names)) if o != axis)),
            None,
        )
        if probe is None:
            return None
        steps.append(tuple(solved[probe][i] - base_val[i] for i in range(len(base_val))))

    def instance(assign):
        return tuple(
            base_val[i]
            + sum((assign[a] - base_key[a]) * steps[a][i] for a in range(len(names)))
            for i in range(len(base_val))
        )

    # regenerate within the bound
    regen = set()
    excluded_origin = False
    span = bound + 2
    from itertools import product as iproduct

    for assign in iproduct(range(span), repeat=len(names)):
        vals = instance(assign)
        if any(v < 0 for v in vals):
            continue
        out_deg = _letter_len(letters[0]) + 2 * (vals[0] + vals[1])
        if out_deg > bound:
            continue
        if tuple(vals) not in have:
            if all(v == 0 for v in vals) and len(names) == 2:
                excluded_origin = True
                continue
            return None
        regen.add(tuple(vals))
    if regen != have:
        return None
    return excluded_origin


def _letter_len(letter: str) -> int:
    from .algebra import LETTER_LENGTH

    return LETTER_LENGTH[letter]


def latex_bimodule(M: ConcreteDABimodule) -> str:
    """A standalone LaTeX document with one bordered matrix per block."""
    blocks: dict[int, list] = {}
    from .algebra import idem_weight

    for g in M.generators:
        blocks.setdefault(idem_weight(g.left), []).append(g)
    chunks = [
        "\\documentclass{article}",
        "\\usepackage{amsmath}",
        "\\usepackage[margin=1cm,landscape]{geometry}",
        "\\begin{document}",
        f"\\section*{{{latex_generator(M.name)} (degree bound {M.bound})}}",
    ]
    for w in sorted(blocks):
        gens = blocks[w]
        labels = [latex_generator(g.name) for g in gens]
        chunks.append("\\[\\setlength{\\arraycolsep}{4pt}")
        chunks.append(
            "\\begin{array}{r|" + "c" * len(gens) + "}"
        )
        chunks.append(" & " + " & ".join(labels) + r" \\ \hline")
        for row in gens:
            line = [latex_generator(row.name)]
            for col in gens:
                terms = M.terms(row.name, col.name)
                if not terms:
                    line.append("0")
                    continue
                fitted = fit_cell(terms, M.bound)
                if fitted is None:
                    fitted = [
                        _family_latex(_letters_of(t), _vectors(t), False)
                        for t in sorted(terms, key=ConcreteTerm.sort_key)
                    ]
                line.append(" + ".join(fitted))
            chunks.append(" & ".join(line) + r" \\")
        chunks.append("\\end{array}\\]")
    chunks.append("\\end{document}")
    return "\n".join(chunks) + "\n"
