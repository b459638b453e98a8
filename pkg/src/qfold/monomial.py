"""Quiver orientations, divided-power monomial words, and the orbit-closure
codimension statistic.

Three word constructions are provided: the plain construction on a
symmetric datum (one factor per position of the reduced word), the folded
construction on a quotient datum, and the modified construction on a
symmetric datum with one factor per orbit part.  Every factor lists its
generators in descending label order, so words are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .folding import orbit_blocks
from .rootsys import RootSystemError


@dataclass(frozen=True)
class Orientation:
    """An orientation of the Dynkin edges: (source, target) pairs."""

    edges: tuple

    def targets_of(self, label):
        return tuple(j for i, j in self.edges if i == label)


def validate_orientation(datum, orientation):
    oriented = {frozenset(e) for e in orientation.edges}
    plain = {frozenset(e) for e in datum.edges()}
    if oriented != plain or len(orientation.edges) != len(plain):
        raise RootSystemError("orientation does not match the Dynkin edges")
    return orientation


@dataclass(frozen=True)
class MonomialWord:
    """Product of divided powers: ((label, exponent), ...), zero exponents dropped."""

    letters: tuple

    def __post_init__(self):
        object.__setattr__(self, "letters",
                           tuple((lab, e) for lab, e in self.letters if e))

    def weight(self, datum):
        out = [0] * datum.rank
        for lab, e in self.letters:
            out[datum.index(lab)] += e
        return tuple(out)

    def is_empty(self):
        return not self.letters

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(f"f[{lab}]^({e})" for lab, e in self.letters)

    def to_json(self):
        return [[lab, e] for lab, e in self.letters]

    @classmethod
    def from_json(cls, data):
        return cls(tuple((lab, int(e)) for lab, e in data))


def _factor(datum, dv):
    """F(d): generators in descending label order with exponents from dv."""
    return [(lab, dv[lab]) for lab in reversed(datum.labels) if dv.get(lab)]


def dvec(seq, c, k):
    """Coordinates of c_k * beta_k over the simple roots, as label -> N."""
    datum = seq.datum
    ck = c[k]
    beta = seq.betas[k]
    return {lab: ck * beta[i] for i, lab in enumerate(datum.labels)}


def word_sym(seq, c):
    """The monomial with one descending factor per position of the word."""
    letters = []
    for k in range(seq.N):
        if c[k]:
            letters.extend(_factor(seq.datum, dvec(seq, c, k)))
    return MonomialWord(tuple(letters))


def word_folded(fd, ulseq, ulc):
    """The quotient-side monomial; same construction over the induced order."""
    if ulseq.datum is not fd.quotient and ulseq.datum != fd.quotient:
        raise RootSystemError("folded words need the quotient reduced sequence")
    return word_sym(ulseq, ulc)


def word_modified(fd, seq, c):
    """The orbit-aware monomial: one descending factor per orbit part of c."""
    datum = seq.datum
    letters = []
    for _, positions in orbit_blocks(fd, seq):
        dv = {}
        for s in positions:
            if c[s]:
                for lab, v in dvec(seq, c, s).items():
                    dv[lab] = dv.get(lab, 0) + v
        letters.extend(_factor(datum, dv))
    return MonomialWord(tuple(letters))


def delta_codim(seq, orientation, c):
    """Codimension of the quiver orbit attached to c inside its
    representation space: -sum_{h<k;i} d_i^h d_i^k + sum_{h<k;i->j} d_j^h d_i^k.
    """
    datum = seq.datum
    if not datum.is_symmetric():
        raise RootSystemError("the codimension statistic needs a symmetric datum")
    validate_orientation(datum, orientation)
    ds = [dvec(seq, c, k) for k in range(seq.N)]
    nonzero = [k for k in range(seq.N) if c[k]]
    total = 0
    for a, h in enumerate(nonzero):
        for k in nonzero[a + 1:]:
            dh, dk = ds[h], ds[k]
            total -= sum(dh[lab] * dk[lab] for lab in datum.labels)
            total += sum(dh[j] * dk[i] for i, j in orientation.edges)
    return total


def sigma_word(fd, word):
    """Apply the automorphism letterwise."""
    return MonomialWord(tuple((fd.sigma_label(lab), e) for lab, e in word.letters))


def canonical_word(fd, word, datum=None):
    """Normal form modulo commuting-letter rearrangement.

    Maximal runs of pairwise commuting letters are stably sorted by
    (orbit index, label position).  Two letters commute when they carry
    the same generator or orthogonal simple roots.
    """
    datum = datum or fd.base
    idx = datum.index

    def commute(a, b):
        return a == b or datum.form[idx(a)][idx(b)] == 0

    letters = list(word.letters)
    out = []
    pos = 0
    while pos < len(letters):
        run = [letters[pos]]
        pos += 1
        while pos < len(letters) and all(commute(letters[pos][0], x[0]) for x in run):
            run.append(letters[pos])
            pos += 1
        run.sort(key=lambda x: (fd.orbit_index(x[0]), idx(x[0])))
        out.extend(run)
    return MonomialWord(tuple(out))


def collapse_orbit_runs(fd, word):
    """Replace each full-orbit run of equal exponents by its quotient letter.

    This is the letter-level shadow of the fixed-point bijection: defined
    exactly on words whose runs cover whole orbits with constant exponent.
    """
    letters = list(word.letters)
    out = []
    pos = 0
    while pos < len(letters):
        k = fd.orbit_index(letters[pos][0])
        size = len(fd.orbits[k])
        chunk = letters[pos:pos + size]
        if len(chunk) != size or {lab for lab, _ in chunk} != set(fd.orbits[k]):
            raise ValueError("word does not decompose into full orbit runs")
        exps = {e for _, e in chunk}
        if len(exps) != 1:
            raise ValueError("orbit run has non-constant exponents")
        out.append((fd.quotient.labels[k], exps.pop()))
        pos += size
    return MonomialWord(tuple(out))
