"""Per-weight assembly of the monomial Gram matrix, its symmetric
unitriangular factorization, the bar-splitting of the triangular factor,
and the comparison machinery between a folding's two sides.

Matrix convention: columns hold basis expansions, rows and columns are
sorted ascending in the lex order on exponent vectors, so the factor
accumulation runs from the bottom-right corner upward.
"""

from __future__ import annotations

from dataclasses import dataclass

from .folding import FoldingDatum, sigma_on_exponents
from .gram import inner_mackey
from .laurent import (ONE, LaurentPoly, RationalFn, RF_ZERO, bar,
                      parse_laurent, parse_rational, split_bar_parts)
from .monomial import word_folded, word_modified, word_sym
from .rootsys import ReducedSequence, enumerate_block


class SingularPivot(ArithmeticError):
    pass


class NotIntegral(ArithmeticError):
    pass


class IndexMismatch(ValueError):
    pass


BASES = ("modified", "folded", "symmetric")


@dataclass(frozen=True)
class Setup:
    """Everything a per-weight computation needs: the folding, both reduced
    sequences, the base orientation, and the basis choice."""

    fd: FoldingDatum
    seq: ReducedSequence
    ulseq: ReducedSequence
    orientation: object
    basis: str = "modified"

    def active(self):
        """(datum, sequence) pair the chosen basis lives on."""
        if self.basis == "folded":
            return self.fd.quotient, self.ulseq
        return self.fd.base, self.seq

    def word_for(self, c, basis=None):
        basis = basis or self.basis
        if basis == "folded":
            return word_folded(self.fd, self.ulseq, c)
        if basis == "modified":
            return word_modified(self.fd, self.seq, c)
        if basis == "symmetric":
            return word_sym(self.seq, c)
        raise ValueError(f"unknown basis {basis!r}")


@dataclass
class TransitionBlock:
    weight: tuple
    index: list
    lam: list
    H: list
    D: list
    P: list
    Q: list


def gram_block(setup, gamma, basis=None):
    """Index and Gram matrix of the chosen monomial family at weight gamma."""
    basis = basis or setup.basis
    datum, seq = (setup.fd.quotient, setup.ulseq) if basis == "folded" \
        else (setup.fd.base, setup.seq)
    index = enumerate_block(seq, gamma)
    words = [setup.word_for(c, basis) for c in index]
    n = len(index)
    lam = [[None] * n for _ in range(n)]
    for a in range(n):
        for b in range(a, n):
            value = inner_mackey(datum, words[a], words[b])
            lam[a][b] = value
            lam[b][a] = value
    return index, lam


def ldl(index, lam):
    """Solve lam = H^t D H for unit lower triangular H and diagonal D.

    With ascending index order the corner entry lam[n-1][n-1] is already a
    pivot, so rows are processed from the bottom up.  H is certified into
    Laurent form entry by entry; D stays rational.
    """
    n = len(lam)
    H = [[RF_ZERO] * n for _ in range(n)]
    D = [RF_ZERO] * n
    scaled = [[RF_ZERO] * n for _ in range(n)]      # scaled[e][j] = D[e] * H[e][j]
    for i in range(n - 1, -1, -1):
        pivot = lam[i][i]
        for e in range(i + 1, n):
            pivot = pivot - H[e][i] * scaled[e][i]
        D[i] = pivot
        if i and pivot.is_zero():
            raise SingularPivot(f"zero pivot at block position {i}")
        for j in range(i - 1, -1, -1):
            value = lam[i][j]
            for e in range(i + 1, n):
                value = value - H[e][i] * scaled[e][j]
            H[i][j] = value / pivot
            scaled[i][j] = value
    out = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == j:
                out[i][j] = ONE
            elif j > i:
                out[i][j] = LaurentPoly(0)
            else:
                lp = H[i][j].to_laurent()
                if lp is None:
                    raise NotIntegral(
                        f"H[{i}][{j}] = {H[i][j]} is not a Laurent polynomial")
                out[i][j] = lp
    return out, D


def pq_split(H):
    """Split unit lower triangular H as H = PQ with P strictly positive in q
    off the diagonal and Q bar-invariant.

    Entries are solved in increasing band distance i - j; within a band
    every entry depends only on strictly smaller bands.
    """
    n = len(H)
    P = [[LaurentPoly(1 if i == j else 0) for j in range(n)] for i in range(n)]
    Q = [[LaurentPoly(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for dist in range(1, n):
        for i in range(dist, n):
            j = i - dist
            a = H[i][j]
            for k in range(j + 1, i):
                a = a - P[i][k] * Q[k][j]
            plus, const, minus = split_bar_parts(a)
            P[i][j] = plus - bar(minus)
            Q[i][j] = minus + bar(minus) + const
    return P, Q


def reconstruct_lam(H, D):
    n = len(H)
    out = [[RF_ZERO] * n for _ in range(n)]
    for a in range(n):
        for b in range(a, n):
            total = RF_ZERO
            for e in range(max(a, b), n):
                total = total + RationalFn(H[e][a] * H[e][b]) * D[e]
            out[a][b] = total
            out[b][a] = total
    return out


def matmul_laurent(A, B):
    n = len(A)
    return [[sum((A[i][k] * B[k][j] for k in range(n)), LaurentPoly(0))
             for j in range(n)] for i in range(n)]


def sigma_submatrix(fd, seq, index, M):
    """Rows and columns at sigma-fixed exponent vectors.

    The surviving order is the one inherited from the quotient block, which
    coincides with the ascending order of the fixed vectors themselves.
    """
    keep = [a for a, c in enumerate(index)
            if sigma_on_exponents(fd, seq, c) == c]
    sub_index = [index[a] for a in keep]
    sub = [[M[a][b] for b in keep] for a in keep]
    return sub_index, sub


@dataclass
class CompareReport:
    equal: bool
    p: int
    diffs: list

    def __str__(self):
        if self.equal:
            return f"congruent mod {self.p}"
        lines = [f"NOT congruent mod {self.p}:"]
        lines += [f"  ({i},{j}): {a} vs {b}" for i, j, a, b in self.diffs]
        return "\n".join(lines)


def _mod_p(lp, p):
    return tuple(sorted((e, c % p) for e, c in lp.coeffs.items() if c % p))


def mod_p_compare(P_sigma, ulP, p):
    """Entrywise comparison of two Laurent matrices over Z/p."""
    n = len(ulP)
    if len(P_sigma) != n or any(len(row) != n for row in P_sigma):
        raise IndexMismatch("matrices have different index sets")
    diffs = []
    for i in range(n):
        for j in range(n):
            if _mod_p(P_sigma[i][j], p) != _mod_p(ulP[i][j], p):
                diffs.append((i, j, P_sigma[i][j], ulP[i][j]))
    return CompareReport(not diffs, p, diffs)


def pipeline(setup, gamma):
    """gram_block -> ldl -> pq_split, with all artifacts attached."""
    index, lam = gram_block(setup, gamma)
    if not index:
        return TransitionBlock(tuple(gamma), [], [], [], [], [], [])
    H, D = ldl(index, lam)
    P, Q = pq_split(H)
    return TransitionBlock(tuple(gamma), index, lam, H, D, P, Q)


# -- serialization ----------------------------------------------------------


def block_to_json(block, labels):
    return {
        "weight": list(block.weight),
        "labels": list(labels),
        "index": [list(c) for c in block.index],
        "lambda": [[str(v) for v in row] for row in block.lam],
        "H": [[str(v) for v in row] for row in block.H],
        "D": [str(v) for v in block.D],
        "P": [[str(v) for v in row] for row in block.P],
        "Q": [[str(v) for v in row] for row in block.Q],
    }


def block_from_json(data):
    return TransitionBlock(
        weight=tuple(data["weight"]),
        index=[tuple(c) for c in data["index"]],
        lam=[[parse_rational(v) for v in row] for row in data["lambda"]],
        H=[[parse_laurent(v) for v in row] for row in data["H"]],
        D=[parse_rational(v) for v in data["D"]],
        P=[[parse_laurent(v) for v in row] for row in data["P"]],
        Q=[[parse_laurent(v) for v in row] for row in data["Q"]],
    )


def blocks_equal(a, b):
    return (a.weight == b.weight and a.index == b.index and a.lam == b.lam
            and a.H == b.H and a.D == b.D and a.P == b.P and a.Q == b.Q)


def block_to_tsv(block, labels):
    lines = []
    weight = ", ".join(f"{n}*a[{lab}]" for lab, n in zip(labels, block.weight) if n)
    lines.append(f"# weight\t{weight or '0'}")
    lines.append("# index")
    for c in block.index:
        lines.append("\t".join(str(x) for x in c))
    for name, matrix in (("lambda", block.lam), ("H", block.H),
                         ("P", block.P), ("Q", block.Q)):
        lines.append(f"# {name}")
        for row in matrix:
            lines.append("\t".join(str(v) for v in row))
    lines.append("# D")
    lines.append("\t".join(str(v) for v in block.D))
    return "\n".join(lines) + "\n"
