"""Inner products of monomial words by two independent routes.

The closed route enumerates label-preserving matchings between the two
expanded letter sequences and sums q^(-A) over the form-weighted inversion
statistic A.  The oracle route recurses through the coproduct: peeling the
first letter of one word distributes over the positions of the other with
an explicit q-twist.  Both return exact values in Q(q) and must agree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .laurent import (ONE, ZERO, LaurentPoly, RationalFn, RF_ONE, RF_ZERO,
                      q_power, qfact)


class MismatchError(ArithmeticError):
    """Raised when the restricted and quotient matching sums disagree."""


@dataclass(frozen=True)
class LetterSequence:
    """A word with divided powers expanded to single letters.

    ``prefactor`` is the product of the quantum factorials of the original
    exponents, each in the letter's own q-power.
    """

    labels: tuple
    prefactor: LaurentPoly


def expand_word(word, datum):
    labels = []
    prefactor = ONE
    for lab, e in word.letters:
        labels.extend([lab] * e)
        prefactor = prefactor * qfact(e, datum.d(lab))
    return LetterSequence(tuple(labels), prefactor)


def matchings(nu, nup):
    """All label-preserving bijections positions(nu) -> positions(nup).

    Empty when the label multisets differ; otherwise the count is the
    product of the multiplicity factorials.
    """
    if len(nu) != len(nup):
        return []
    groups = {}
    for pos, lab in enumerate(nu):
        groups.setdefault(lab, ([], []))[0].append(pos)
    for pos, lab in enumerate(nup):
        if lab not in groups:
            return []
        groups[lab][1].append(pos)
    per_label = []
    for lab, (src, dst) in sorted(groups.items(), key=lambda kv: kv[1][0][0]):
        if len(src) != len(dst):
            return []
        per_label.append([list(zip(src, perm))
                          for perm in itertools.permutations(dst)])
    out = []
    for combo in itertools.product(*per_label):
        w = [None] * len(nu)
        for pairs in combo:
            for s, t in pairs:
                w[s] = t
        out.append(tuple(w))
    return out


def inversion_stat(datum, nu, w):
    """A(w) = sum over inverted pairs k < l, w(k) > w(l) of (a_{nu_k}, a_{nu_l})."""
    idx = [datum.index(lab) for lab in nu]
    total = 0
    n = len(nu)
    for k in range(n):
        for l in range(k + 1, n):
            if w[k] > w[l]:
                total += datum.form[idx[k]][idx[l]]
    return total


def matching_sum(datum, nu, nup):
    """Sum of q^(-A) over all matchings; a Laurent polynomial.

    Equal consecutive letters of nu are collapsed: the inversion statistic
    splits into run-internal inversions, which sum to a Gaussian factorial
    independently of everything else, and cross terms that depend only on
    the set of target positions, enumerated here with ascending targets
    inside each run.
    """
    if len(nu) != len(nup):
        return ZERO
    if not nu:
        return ONE
    by_label = {}
    for pos, lab in enumerate(nup):
        by_label.setdefault(lab, []).append(pos)
    counts = {}
    for lab in nu:
        counts[lab] = counts.get(lab, 0) + 1
    if any(len(by_label.get(lab, ())) != m for lab, m in counts.items()):
        return ZERO

    idx = datum.index
    form = datum.form
    rows = [form[idx(lab)] for lab in nu]
    cols = [idx(lab) for lab in nup]

    prefactor = ONE
    run_start = [False] * len(nu)
    pos = 0
    while pos < len(nu):
        end = pos
        while end < len(nu) and nu[end] == nu[pos]:
            end += 1
        run_start[pos] = True
        t = form[idx(nu[pos])][idx(nu[pos])]
        for j in range(2, end - pos + 1):
            prefactor = prefactor * LaurentPoly({-t * k: 1 for k in range(j)})
        pos = end

    used = [False] * len(nup)
    placed = []                      # target positions chosen so far, in nu order
    acc = {}

    def rec(k, a_cross):
        if k == len(nu):
            acc[-a_cross] = acc.get(-a_cross, 0) + 1
            return
        row = rows[k]
        floor = -1 if run_start[k] else placed[k - 1]
        for t in by_label[nu[k]]:
            if used[t] or t <= floor:
                continue
            delta = 0
            for t2 in placed:
                if t2 > t:
                    delta += row[cols[t2]]
            used[t] = True
            placed.append(t)
            rec(k + 1, a_cross + delta)
            placed.pop()
            used[t] = False

    rec(0, 0)
    return LaurentPoly(acc) * prefactor


def delta_weight(datum, word):
    """Product over letters of (1 - q_i^2)^exponent; depends only on the weight."""
    out = ONE
    for lab, e in word.letters:
        out = out * (ONE - q_power(2 * datum.d(lab))) ** e
    return out


def inner_mackey(datum, word, wordp):
    """Inner product via the matching sum; zero across distinct weights."""
    if word.weight(datum) != wordp.weight(datum):
        return RF_ZERO
    nu = expand_word(word, datum)
    nup = expand_word(wordp, datum)
    total = matching_sum(datum, nu.labels, nup.labels)
    return RationalFn(total,
                      delta_weight(datum, word) * nu.prefactor * nup.prefactor)


# append-only memo; concurrent readers only ever see finished values
_SHUFFLE_CACHE = {}


def _letters_pairing(datum, nu, nup):
    """Coproduct recursion on expanded letter sequences."""
    if not nu:
        return RF_ONE if not nup else RF_ZERO
    if len(nu) != len(nup):
        return RF_ZERO
    key = (datum, nu, nup)
    cached = _SHUFFLE_CACHE.get(key)
    if cached is not None:
        return cached
    head, rest = nu[0], nu[1:]
    hi = datum.index(head)
    self_pairing = RationalFn(1, ONE - q_power(2 * datum.d(head)))
    total = RF_ZERO
    twist = 0
    for k, lab in enumerate(nup):
        if lab == head:
            term = self_pairing * _letters_pairing(datum, rest, nup[:k] + nup[k + 1:])
            total = total + RationalFn(q_power(-twist)) * term
        twist += datum.form[datum.index(lab)][hi]
    _SHUFFLE_CACHE[key] = total
    return total


def inner_shuffle(datum, word, wordp):
    """Inner product via the coproduct recursion; agrees with inner_mackey."""
    if word.weight(datum) != wordp.weight(datum):
        return RF_ZERO
    nu = expand_word(word, datum)
    nup = expand_word(wordp, datum)
    value = _letters_pairing(datum, nu.labels, nup.labels)
    return value / RationalFn(nu.prefactor * nup.prefactor)


def pbw_diag(datum, seq, c):
    """Diagonal inner product of the PBW element indexed by c."""
    den = ONE
    for k, ck in enumerate(c):
        d = datum.d(seq.indices[k])
        for j in range(1, ck + 1):
            den = den * (ONE - q_power(2 * d * j))
    return RationalFn(1, den)


def inner_mackey_restricted(fd, ulword, ulwordp):
    """Quotient matching sum recomputed inside the unfolded sequences.

    Each quotient matching expands blockwise to a base matching (identity
    on every orbit block); the inversion statistic must be preserved and
    the two sums must agree.  Returns (sum, witness) where witness pairs
    each quotient matching with its expanded image.
    """
    quotient, base = fd.quotient, fd.base
    ulnu = expand_word(ulword, quotient).labels
    ulnup = expand_word(ulwordp, quotient).labels

    def expanded(labels):
        out, starts = [], []
        for lab in labels:
            starts.append(len(out))
            out.extend(fd.orbits[quotient.index(lab)])
        return tuple(out), starts

    nu, starts = expanded(ulnu)
    nup, startsp = expanded(ulnup)
    quotient_sum = ZERO
    restricted_sum = ZERO
    witness = []
    for w in matchings(ulnu, ulnup):
        a_quot = inversion_stat(quotient, ulnu, w)
        wp = [None] * len(nu)
        for s, lab in enumerate(ulnu):
            size = len(fd.orbits[quotient.index(lab)])
            for i in range(size):
                wp[starts[s] + i] = startsp[w[s]] + i
        wp = tuple(wp)
        a_base = inversion_stat(base, nu, wp)
        if a_base != a_quot:
            raise MismatchError(
                f"inversion statistic changed under unfolding: {a_quot} -> {a_base}")
        quotient_sum = quotient_sum + q_power(-a_quot)
        restricted_sum = restricted_sum + q_power(-a_base)
        witness.append((w, wp))
    if quotient_sum != restricted_sum:
        raise MismatchError("restricted matching sum differs from the quotient sum")
    return restricted_sum, witness
