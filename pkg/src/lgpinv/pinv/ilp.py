"""Linearised binary program whose optimum is the minimum flip count.

Variables (H-vertices ``i, j`` in ``0..m-1``, root rows ``k`` in ``0..n-1``):

* ``b_k_j``   incidence of root vertex ``k`` and H-vertex (root edge) ``j``
* ``x_i_j``   flip indicator for the unordered pair ``i < j``
* ``p_k_i_j`` product ``b_k_i * b_k_j`` for ``i <= j``

Constraints, for every ``i <= j``::

    sum_k p_k_i_j - z_ij x_i_j = a_ij + 2 [i == j]          (c_i_j)
    b_k_i + b_k_j - 2 p_k_i_j >= 0          for every k     (p_i_j_k_lo)
    b_k_i + b_k_j -   p_k_i_j <= 1          for every k     (p_i_j_k_hi)

with ``z_ij = +1`` where ``a_ij = 0`` and ``-1`` where ``a_ij = 1``.  The
diagonal carries no flip variable.  The objective is ``sum_{i<j} x_i_j``.
"""

from __future__ import annotations

import io
import os
from dataclasses import dataclass
from typing import Iterator, TextIO

import numpy as np

from ..graph import Graph


@dataclass(frozen=True)
class Constraint:
    name: str
    terms: tuple[tuple[int, str], ...]  # (coefficient, variable)
    sense: str  # "=", ">=", "<="
    rhs: int


@dataclass(frozen=True)
class IlpInstance:
    h_tilde: Graph
    m: int
    n: int
    a: np.ndarray
    z: np.ndarray

    def b_var(self, k: int, j: int) -> str:
        return f"b_{k}_{j}"

    def x_var(self, i: int, j: int) -> str:
        i, j = min(i, j), max(i, j)
        return f"x_{i}_{j}"

    def p_var(self, k: int, i: int, j: int) -> str:
        i, j = min(i, j), max(i, j)
        return f"p_{k}_{i}_{j}"

    def pairs(self) -> Iterator[tuple[int, int]]:
        """Index pairs ``i <= j`` in lexicographic order."""
        for i in range(self.m):
            for j in range(i, self.m):
                yield i, j

    def objective_vars(self) -> list[str]:
        return [self.x_var(i, j) for i, j in self.pairs() if i < j]

    def variables(self) -> list[str]:
        out = [self.b_var(k, j) for j in range(self.m) for k in range(self.n)]
        out += self.objective_vars()
        out += [self.p_var(k, i, j) for i, j in self.pairs() for k in range(self.n)]
        return out

    def constraints(self) -> Iterator[Constraint]:
        for i, j in self.pairs():
            terms = [(1, self.p_var(k, i, j)) for k in range(self.n)]
            if i != j:
                terms.append((-int(self.z[i, j]), self.x_var(i, j)))
            yield Constraint(f"c_{i}_{j}", tuple(terms), "=", int(self.a[i, j]) + (2 if i == j else 0))
            for k in range(self.n):
                bsum = ((2, self.b_var(k, i)),) if i == j else ((1, self.b_var(k, i)), (1, self.b_var(k, j)))
                p = self.p_var(k, i, j)
                yield Constraint(f"p_{i}_{j}_{k}_lo", bsum + ((-2, p),), ">=", 0)
                yield Constraint(f"p_{i}_{j}_{k}_hi", bsum + ((-1, p),), "<=", 1)

    def constraint_count(self) -> int:
        t = self.m * (self.m + 1) // 2
        return t + 2 * self.n * t


def default_rows(m: int) -> int:
    """Root rows that never cut off an optimum.

    A repaired graph whose components have ``m_1, ..., m_r`` vertices has a
    root with at most ``sum (m_c + 1) <= 2m`` vertices (every component a tree
    root, isolated vertices becoming disjoint edges).
    """
    return max(2, 2 * m)


def build_ilp(h_tilde: Graph, rows: int | None = None) -> IlpInstance:
    """Instance for ``h_tilde`` with ``rows`` root rows (default ``2m``)."""
    m = h_tilde.vertex_count
    a = h_tilde.adjacency_matrix()
    z = np.where(a == 0, 1, -1)
    np.fill_diagonal(z, 0)
    a.setflags(write=False)
    z.setflags(write=False)
    return IlpInstance(h_tilde, m, default_rows(m) if rows is None else rows, a, z)


def check_assignment(inst: IlpInstance, b: np.ndarray, x: dict[tuple[int, int], int]) -> str | None:
    """Check every constraint with ``p`` derived from ``b``; None when all hold.

    ``x`` maps pairs ``(i, j)`` with ``i < j`` to 0/1; missing pairs are 0.
    """
    if b.shape != (inst.n, inst.m):
        return f"B has shape {b.shape}, expected {(inst.n, inst.m)}"
    if not np.isin(b, (0, 1)).all():
        return "B is not binary"
    values: dict[str, int] = {}
    for k in range(inst.n):
        for j in range(inst.m):
            values[inst.b_var(k, j)] = int(b[k, j])
    for i, j in inst.pairs():
        if i < j:
            values[inst.x_var(i, j)] = int(x.get((i, j), 0))
        for k in range(inst.n):
            values[inst.p_var(k, i, j)] = int(b[k, i] * b[k, j])
    for c in inst.constraints():
        lhs = sum(coef * values[var] for coef, var in c.terms)
        ok = lhs == c.rhs if c.sense == "=" else lhs >= c.rhs if c.sense == ">=" else lhs <= c.rhs
        if not ok:
            return f"{c.name}: lhs {lhs} {c.sense} {c.rhs} violated"
    return None


# -- LP file ----------------------------------------------------------------------


def _expr(terms, per_line: int = 8) -> str:
    chunks = []
    for idx, (coef, var) in enumerate(terms):
        sign = "-" if coef < 0 else "+"
        mag = abs(coef)
        tok = f"{sign} {var}" if mag == 1 else f"{sign} {mag} {var}"
        if idx == 0 and sign == "+":
            tok = tok[2:]
        chunks.append(tok)
    lines = [" ".join(chunks[i:i + per_line]) for i in range(0, len(chunks), per_line)]
    return "\n   ".join(lines)


def write_lp(inst: IlpInstance, out: TextIO) -> None:
    out.write(f"\\ minimum-flip line graph recovery: m={inst.m} n={inst.n}\n")
    out.write("Minimize\n")
    obj = inst.objective_vars()
    if obj:
        out.write(f" obj: {_expr([(1, v) for v in obj])}\n")
    else:
        out.write(" obj: 0 b_0_0\n" if inst.m and inst.n else " obj: 0 dummy\n")
    out.write("Subject To\n")
    for c in inst.constraints():
        out.write(f" {c.name}: {_expr(c.terms)} {c.sense} {c.rhs}\n")
    out.write("Binary\n")
    names = inst.variables() or ["dummy"]
    for i in range(0, len(names), 10):
        out.write(" " + " ".join(names[i:i + 10]) + "\n")
    out.write("End\n")


def export_lp(inst: IlpInstance, destination: str | os.PathLike | TextIO | None = None) -> str:
    """Render the instance in LP format; write it to ``destination`` if given."""
    buf = io.StringIO()
    write_lp(inst, buf)
    text = buf.getvalue()
    if destination is None:
        return text
    if hasattr(destination, "write"):
        destination.write(text)
    else:
        with open(destination, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
    return text
