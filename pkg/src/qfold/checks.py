"""Bulk verification sweeps over bounded-height weight blocks.

Each suite returns a CheckResult with the number of instances exercised
and a list of failure descriptions; an empty list means the property held
everywhere.  The CLI check command and the acceptance tests both run
these.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .folding import fold_exponent, orbit_blocks, sigma_on_exponents, unfold_exponent
from .laurent import RationalFn
from .gram import (MismatchError, delta_weight, expand_word, inner_mackey,
                   inner_mackey_restricted, inner_shuffle, matching_sum,
                   pbw_diag)
from .monomial import (MonomialWord, canonical_word, collapse_orbit_runs,
                       delta_codim, sigma_word, word_folded, word_modified)
from .presets import get_folding, get_preset
from .rootsys import enumerate_block, weights_up_to
from .transition import (Setup, matmul_laurent, mod_p_compare, pipeline,
                         reconstruct_lam, sigma_submatrix)


@dataclass
class CheckResult:
    name: str
    instances: int = 0
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def fail(self, message):
        self.failures.append(message)

    def __str__(self):
        status = "pass" if self.ok else "FAIL"
        head = f"{status}  {self.name}: {self.instances} instances"
        lines = [head] + [f"  ! {f}" for f in self.failures[:20]]
        if len(self.failures) > 20:
            lines.append(f"  ... {len(self.failures) - 20} more failures")
        lines += [f"  - {n}" for n in self.notes]
        return "\n".join(lines)


def _setup_for(preset):
    basis = "folded" if preset.is_quotient else "modified"
    return Setup(preset.fd, preset.seq, preset.ulseq, preset.orientation, basis)


def _blocks(preset, max_height):
    setup = _setup_for(preset)
    datum, seq = setup.active()
    for gamma in weights_up_to(datum, max_height):
        index = enumerate_block(seq, gamma)
        if index:
            yield setup, datum, seq, gamma, index


def check_oracle(presets=("A3", "B2", "D4", "G2"), max_height=6,
                 random_pairs=500, seed=20260809):
    """Matching-sum route equals coproduct-recursion route on every pair."""
    result = CheckResult(f"oracle equivalence (height <= {max_height})")
    for name in presets:
        preset = get_preset(name)
        for setup, datum, _seq, gamma, index in _blocks(preset, max_height):
            words = [setup.word_for(c) for c in index]
            for a in range(len(words)):
                for b in range(a, len(words)):
                    result.instances += 1
                    lhs = inner_mackey(datum, words[a], words[b])
                    rhs = inner_shuffle(datum, words[a], words[b])
                    if lhs != rhs:
                        result.fail(f"{name} {gamma} {index[a]} vs {index[b]}: "
                                    f"{lhs} != {rhs}")
    rng = random.Random(seed)
    names = list(presets)
    for _ in range(random_pairs):
        preset = get_preset(rng.choice(names))
        setup = _setup_for(preset)
        datum, _ = setup.active()
        w1 = _random_word(rng, datum, max_height)
        letters = list(expand_word(w1, datum).labels)
        rng.shuffle(letters)
        w2 = _regroup(rng, letters)
        result.instances += 1
        lhs = inner_mackey(datum, w1, w2)
        rhs = inner_shuffle(datum, w1, w2)
        if lhs != rhs:
            result.fail(f"random pair {w1} vs {w2} on {preset.name}: {lhs} != {rhs}")
    return result


def _random_word(rng, datum, max_height):
    budget = rng.randint(1, max_height)
    letters = []
    while budget > 0:
        e = rng.randint(1, min(2, budget))
        letters.append((rng.choice(datum.labels), e))
        budget -= e
    return MonomialWord(tuple(letters))


def _regroup(rng, letters):
    out = []
    pos = 0
    while pos < len(letters):
        run = 1
        while pos + run < len(letters) and letters[pos + run] == letters[pos] \
                and rng.random() < 0.5:
            run += 1
        out.append((letters[pos], run))
        pos += run
    return MonomialWord(tuple(out))


def check_factorization(presets=("A3", "B2", "D4", "G2"), max_height=8):
    """Reconstruction and shape invariants of every transition block."""
    result = CheckResult(f"factorization invariants (height <= {max_height})")
    for name in presets:
        preset = get_preset(name)
        for setup, datum, seq, gamma, index in _blocks(preset, max_height):
            block = pipeline(setup, gamma)
            result.instances += 1
            tag = f"{name} {gamma}"
            if reconstruct_lam(block.H, block.D) != block.lam:
                result.fail(f"{tag}: H^t D H does not reconstruct the Gram matrix")
            if matmul_laurent(block.P, block.Q) != block.H:
                result.fail(f"{tag}: PQ != H")
            n = len(index)
            for i in range(n):
                for j in range(i):
                    if not block.P[i][j].in_qZq():
                        result.fail(f"{tag}: P[{i}][{j}] = {block.P[i][j]} not in qZ[q]")
                for j in range(n):
                    if not block.Q[i][j].is_bar_invariant():
                        result.fail(f"{tag}: Q[{i}][{j}] not bar-invariant")
            for i, c in enumerate(index):
                if block.D[i] != pbw_diag(datum, seq, c):
                    result.fail(f"{tag}: D[{i}] differs from the orthogonal diagonal")
    return result


def check_delta(presets=("A3", "A5", "D4", "D5", "E6"), max_height=10):
    """Codimension statistic vanishes on every single-part exponent vector."""
    result = CheckResult(f"single-part codimension zero (height <= {max_height})")
    for name in presets:
        preset = get_preset(name)
        seq = preset.seq
        fold = get_folding(_FOLD_OF[name]) if name in _FOLD_OF else preset
        fd = fold.fd
        for _k, positions in orbit_blocks(fd, seq):
            stack = [(0, max_height, [0] * seq.N)]
            while stack:
                pos, budget, c = stack.pop()
                if pos == len(positions):
                    if any(c):
                        result.instances += 1
                        if delta_codim(seq, preset.orientation, c) != 0:
                            result.fail(f"{name}: delta != 0 at {tuple(c)}")
                    continue
                s = positions[pos]
                size = sum(seq.betas[s])
                ck = 0
                while ck * size <= budget:
                    cc = c[:]
                    cc[s] = ck
                    stack.append((pos + 1, budget - ck * size, cc))
                    ck += 1
    return result


_FOLD_OF = {"A3": "A3->B2", "A5": "A5->B3", "D4": "D4->G2",
            "D5": "D5->C4", "E6": "E6->F4"}


def check_restriction(folds=("A3->B2", "D4->G2"), max_height=6):
    """Quotient matching sums survive unfolding with the statistic intact,
    and the restricted sum rebuilt with the quotient weight factor and
    quotient factorials reproduces the quotient Gram entry exactly."""
    result = CheckResult(f"restricted matching sums (quotient height <= {max_height})")
    for spec in folds:
        preset = get_folding(spec)
        fd, ulseq = preset.fd, preset.ulseq
        quotient = fd.quotient
        for gamma in weights_up_to(quotient, max_height):
            index = enumerate_block(ulseq, gamma)
            words = [word_folded(fd, ulseq, c) for c in index]
            for a in range(len(words)):
                for b in range(a, len(words)):
                    result.instances += 1
                    tag = f"{spec} {gamma} {index[a]} vs {index[b]}"
                    try:
                        total, _ = inner_mackey_restricted(fd, words[a], words[b])
                    except MismatchError as exc:
                        result.fail(f"{tag}: {exc}")
                        continue
                    rebuilt = RationalFn(
                        total,
                        delta_weight(quotient, words[a])
                        * expand_word(words[a], quotient).prefactor
                        * expand_word(words[b], quotient).prefactor)
                    if rebuilt != inner_mackey(quotient, words[a], words[b]):
                        result.fail(f"{tag}: rebuilt entry differs from the "
                                    f"quotient inner product")
    return result


def check_congruence(folds=("A3->B2", "D4->G2"), max_height=6):
    """P restricted to fixed rows/columns is congruent mod p to quotient P.

    Also reports, without gating, how often the raw matching sums agree
    mod p between the two sides.
    """
    result = CheckResult(f"mod-p congruence of P (quotient height <= {max_height})")
    sums_same = sums_diff = 0
    for spec in folds:
        preset = get_folding(spec)
        fd = preset.fd
        p = fd.p
        base_setup = Setup(fd, preset.seq, preset.ulseq, preset.orientation, "modified")
        ul_setup = Setup(fd, preset.seq, preset.ulseq, preset.orientation, "folded")
        for ulgamma in weights_up_to(fd.quotient, max_height):
            ul_index = enumerate_block(preset.ulseq, ulgamma)
            if not ul_index:
                continue
            result.instances += 1
            ul_block = pipeline(ul_setup, ulgamma)
            gamma = fd.expand_weight(ulgamma)
            block = pipeline(base_setup, gamma)
            sub_index, P_sigma = sigma_submatrix(fd, preset.seq, block.index, block.P)
            expected = [fold_exponent(fd, preset.ulseq, c) for c in ul_index]
            tag = f"{spec} {ulgamma}"
            if sub_index != expected:
                result.fail(f"{tag}: fixed index set does not match the quotient block")
                continue
            report = mod_p_compare(P_sigma, ul_block.P, p)
            if not report.equal:
                result.fail(f"{tag}: {report}")
            sums_same_block, sums_diff_block = _matching_sum_congruence(
                fd, preset, ul_index, block.index, p)
            sums_same += sums_same_block
            sums_diff += sums_diff_block
    result.notes.append(
        f"experimental: raw matching sums congruent mod p on {sums_same} pairs, "
        f"different on {sums_diff} (not a gate)")
    return result


def _matching_sum_congruence(fd, preset, ul_index, index, p):
    same = diff = 0
    quotient, base = fd.quotient, fd.base
    for a, ulc in enumerate(ul_index):
        for ulc2 in ul_index[a:]:
            ulw1 = word_folded(fd, preset.ulseq, ulc)
            ulw2 = word_folded(fd, preset.ulseq, ulc2)
            w1 = word_modified(fd, preset.seq, fold_exponent(fd, preset.ulseq, ulc))
            w2 = word_modified(fd, preset.seq, fold_exponent(fd, preset.ulseq, ulc2))
            ul_sum = matching_sum(quotient, expand_word(ulw1, quotient).labels,
                                  expand_word(ulw2, quotient).labels)
            full = matching_sum(base, expand_word(w1, base).labels,
                                expand_word(w2, base).labels)
            delta = full - ul_sum
            if all(c % p == 0 for c in delta.coeffs.values()):
                same += 1
            else:
                diff += 1
    return same, diff


def check_equivariance(folds=("A3->B2", "D4->G2"), max_height=8):
    """The automorphism permutes modified monomials; fixed ones fold."""
    result = CheckResult(f"sigma-equivariance of modified monomials "
                         f"(height <= {max_height})")
    for spec in folds:
        preset = get_folding(spec)
        fd, seq, ulseq = preset.fd, preset.seq, preset.ulseq
        for gamma in weights_up_to(fd.base, max_height):
            for c in enumerate_block(seq, gamma):
                result.instances += 1
                sc = sigma_on_exponents(fd, seq, c)
                lhs = canonical_word(fd, word_modified(fd, seq, sc))
                rhs = canonical_word(fd, sigma_word(fd, word_modified(fd, seq, c)))
                tag = f"{spec} {gamma} {c}"
                if lhs != rhs:
                    result.fail(f"{tag}: permutation law fails: {lhs} vs {rhs}")
                if sc == c:
                    ulc = unfold_exponent(fd, seq, ulseq, c)
                    folded = collapse_orbit_runs(fd, word_modified(fd, seq, c))
                    if folded != word_folded(fd, ulseq, ulc):
                        result.fail(f"{tag}: fixed word does not collapse to "
                                    f"the folded word")
    return result


SUITES = {
    "oracle": check_oracle,
    "factorization": check_factorization,
    "delta": check_delta,
    "restriction": check_restriction,
    "congruence": check_congruence,
    "equivariance": check_equivariance,
}
