"""Built-in Cartan data: the simply-laced families carrying an admissible
automorphism, their bipartite orientations and reduced words, and the
folded targets reached from them.

Label order is always the sink part followed by the source part, so it is
simultaneously the descending-factor order of the monomial constructions
and the order inducing the quotient labels.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .folding import FoldingDatum, identity_folding, lift_sequence, validate_admissible
from .monomial import Orientation, validate_orientation
from .rootsys import (RootSystemError, betas_from_sequence, bipartite_w0,
                      cartan_datum)


class UnsupportedPreset(RootSystemError):
    pass


@dataclass(frozen=True)
class Preset:
    """A ready-to-use setup: base and quotient data with matching words."""

    name: str
    fd: FoldingDatum
    seq: ReducedSequence          # base reduced sequence (lifted word)
    ulseq: ReducedSequence        # quotient reduced sequence
    orientation: Orientation      # bipartite orientation of the base
    parts: tuple                  # (I0, I1) with I0 sinks and I1 sources
    is_quotient: bool             # True when the preset names the folded target


def _datum_from_edges(labels, edges):
    n = len(labels)
    idx = {lab: i for i, lab in enumerate(labels)}
    form = [[0] * n for _ in range(n)]
    for i in range(n):
        form[i][i] = 2
    for a, b in edges:
        form[idx[a]][idx[b]] = -1
        form[idx[b]][idx[a]] = -1
    return cartan_datum(labels, form)


def _build(name, labels, edges, sigma, part0, part1, is_quotient=False):
    """Assemble a Preset from diagram data; validates everything."""
    datum = _datum_from_edges(labels, edges)
    fd = validate_admissible(datum, sigma)
    word = bipartite_w0(datum, (part0, part1))
    seq = betas_from_sequence(datum, word)
    ulword = _fold_word(fd, part0, part1)
    ulseq = betas_from_sequence(fd.quotient, ulword)
    if lift_sequence(fd, ulword) != word:
        raise RootSystemError("lifted quotient word does not match the base word")
    orientation = Orientation(tuple(
        (b, a) if a in part0 else (a, b) for a, b in datum.edges()))
    validate_orientation(datum, orientation)
    for i, j in orientation.edges:
        if datum.index(j) >= datum.index(i):
            raise RootSystemError("label order is not compatible with the orientation")
    return Preset(name, fd, seq, ulseq, orientation,
                  (tuple(part0), tuple(part1)), is_quotient)


def _fold_word(fd, part0, part1):
    """Collapse each orbit of the alternating base word to its quotient label."""
    repeats = len(bipartite_w0(fd.base, (part0, part1))) \
        // (len(part0) + len(part1))

    def fold_part(part):
        out, seen = [], set()
        for lab in part:
            k = fd.orbit_index(lab)
            if k not in seen:
                seen.add(k)
                out.append(fd.quotient.labels[k])
        return out

    block = fold_part(part0) + fold_part(part1)
    return tuple(block * repeats)


def _preset_a(rank):
    """A_{2n-1} with the flip i <-> i'; folds onto B_n."""
    if rank < 3 or rank % 2 == 0:
        raise UnsupportedPreset(
            f"type A preset needs an odd rank >= 3, got A{rank}")
    n = (rank + 1) // 2
    chain = [str(i) for i in range(1, n + 1)] + [f"{i}'" for i in range(n - 1, 0, -1)]
    edges = list(zip(chain, chain[1:]))
    sigma = {}
    for i in range(1, n):
        sigma[str(i)] = f"{i}'"
        sigma[f"{i}'"] = str(i)
    sigma[str(n)] = str(n)
    part0, part1 = [], []
    for i in range(1, n):
        target = part0 if i % 2 else part1
        target += [str(i), f"{i}'"]
    (part0 if n % 2 else part1).append(str(n))
    return _build(f"A{rank}", tuple(part0 + part1), edges, sigma, part0, part1)


def _preset_d(n):
    """D_n with the fork flip; folds onto C_{n-1}."""
    if n < 4:
        raise UnsupportedPreset(f"type D preset needs rank >= 4, got D{n}")
    chain = [str(i) for i in range(1, n - 1)]
    fork = [str(n), f"{n}'"]
    edges = list(zip(chain, chain[1:])) + [(chain[-1], fork[0]), (chain[-1], fork[1])]
    sigma = {fork[0]: fork[1], fork[1]: fork[0]}
    part0 = [lab for lab in chain if int(lab) % 2]
    part1 = [lab for lab in chain if int(lab) % 2 == 0]
    ((part0 if (n - 2) % 2 == 0 else part1)).extend(fork)
    return _build(f"D{n}", tuple(part0 + part1), edges, sigma, part0, part1)


def _preset_d4_triality():
    """D_4 with the order-3 rotation of the outer nodes; folds onto G_2."""
    labels = ("1", "1'", "1''", "2")
    edges = [("2", "1"), ("2", "1'"), ("2", "1''")]
    sigma = {"1": "1'", "1'": "1''", "1''": "1", "2": "2"}
    return _build("D4", labels, edges, sigma, ["1", "1'", "1''"], ["2"])


def _preset_e6():
    """E_6 with the flip of the two long arms; folds onto F_4."""
    labels = ("1", "1'", "3", "2", "2'", "4")
    edges = [("1", "2"), ("2", "3"), ("3", "2'"), ("2'", "1'"), ("3", "4")]
    sigma = {"1": "1'", "1'": "1", "2": "2'", "2'": "2", "3": "3", "4": "4"}
    return _build("E6", labels, edges, sigma, ["1", "1'", "3"], ["2", "2'", "4"])


_SOURCE_OF = {"B": lambda n: _preset_a(2 * n - 1),
              "C": lambda n: _preset_d(n + 1),
              "F": lambda n: _preset_e6(),
              "G": lambda n: _preset_d4_triality()}


def symmetric_preset(name):
    m = re.fullmatch(r"([ADE])(\d+)", name)
    if not m:
        raise UnsupportedPreset(f"unknown preset {name!r}")
    family, rank = m.group(1), int(m.group(2))
    if family == "A":
        return _preset_a(rank)
    if family == "D":
        return _preset_d4_triality() if rank == 4 else _preset_d(rank)
    if family == "E" and rank == 6:
        return _preset_e6()
    raise UnsupportedPreset(f"unknown preset {name!r}")


def folded_preset(name):
    m = re.fullmatch(r"([BCFG])(\d+)", name)
    if not m:
        raise UnsupportedPreset(f"unknown preset {name!r}")
    family, rank = m.group(1), int(m.group(2))
    checks = {"B": rank >= 2, "C": rank >= 3, "F": rank == 4, "G": rank == 2}
    if not checks[family]:
        raise UnsupportedPreset(f"unknown preset {name!r}")
    src = _SOURCE_OF[family](rank)
    if src.fd.quotient.rank != rank:
        raise UnsupportedPreset(f"{name} is not reachable by folding")
    return Preset(name, src.fd, src.seq, src.ulseq, src.orientation,
                  src.parts, is_quotient=True)


def get_preset(name):
    """Resolve a preset by name; symmetric names give a trivial folding."""
    name = name.strip()
    try:
        return folded_preset(name)
    except UnsupportedPreset:
        pass
    base = symmetric_preset(name)
    fd = identity_folding(base.fd.base)
    seq = betas_from_sequence(fd.base, base.seq.indices)
    ulseq = betas_from_sequence(fd.quotient, base.seq.indices)
    return Preset(name, fd, seq, ulseq, base.orientation, base.parts, False)


_FOLDINGS = {"A->B": _preset_a, "D->C": _preset_d, "E->F": _preset_e6,
             "D->G": _preset_d4_triality}


def preset_orientation(datum):
    """The bipartite orientation of a preset's base datum.

    Matches the datum against the built-in symmetric presets (any label
    order); raises UnsupportedPreset when it is none of them.
    """
    candidates = []
    n = datum.rank
    if n % 2:
        candidates.append(lambda: _preset_a(n))
    if n >= 4:
        candidates.append(lambda: _preset_d(n))
    if n == 4:
        candidates.append(_preset_d4_triality)
    if n == 6:
        candidates.append(_preset_e6)
    for make in candidates:
        try:
            preset = make()
        except (UnsupportedPreset, RootSystemError):
            continue
        base = preset.fd.base
        if set(base.labels) != set(datum.labels):
            continue
        perm = [base.index(lab) for lab in datum.labels]
        if all(datum.form[i][j] == base.form[perm[i]][perm[j]]
               for i in range(n) for j in range(n)):
            return preset.orientation
    raise UnsupportedPreset("datum does not match any built-in orientation preset")


def get_folding(spec):
    """Resolve a folding like ``A3->B2`` to its preset with nontrivial sigma."""
    m = re.fullmatch(r"\s*([A-G]\d+)\s*->\s*([A-G]\d+)\s*", spec)
    if not m:
        raise UnsupportedPreset(f"bad folding spec {spec!r}")
    src_name, dst_name = m.group(1), m.group(2)
    if src_name == "D4" and dst_name == "C3":
        preset = _preset_d(4)
    else:
        preset = symmetric_preset(src_name)
    expected = folded_preset(dst_name)
    if preset.fd.quotient.rank != expected.fd.quotient.rank or \
            preset.fd.quotient.form != expected.fd.quotient.form:
        raise UnsupportedPreset(f"{src_name} does not fold onto {dst_name}")
    return preset
