"""Command-line entry point.

Commands: roots, gram, transition, check.  Exit codes: 0 success,
1 check failure, 2 configuration error, 3 internal invariant breach.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .checks import SUITES
from .folding import identity_folding, orbit_blocks, validate_admissible
from .gram import MismatchError, delta_weight, expand_word, matching_sum
from .laurent import ONE, qfact
from .monomial import Orientation, validate_orientation
from .presets import Preset, UnsupportedPreset, get_folding, get_preset
from .rootsys import (RootSystemError, betas_from_sequence, bipartite_w0,
                      cartan_datum, weights_up_to)
from .transition import (IndexMismatch, NotIntegral, Setup, SingularPivot,
                         block_to_json, block_to_tsv, gram_block, pipeline,
                         sigma_submatrix)


class ConfigError(ValueError):
    pass


def _read_config(path):
    out = {}
    with open(path) as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" in line:
                key, value = line.split("=", 1)
            elif ":" in line:
                key, value = line.split(":", 1)
            else:
                raise ConfigError(f"bad config line: {raw.rstrip()}")
            out[key.strip().replace("_", "-")] = value.strip()
    return out


def _parse_sigma_cycles(text, labels):
    sigma = {}
    for cycle in re.findall(r"\(([^()]*)\)", text):
        members = cycle.split()
        for a, b in zip(members, members[1:] + members[:1]):
            sigma[a] = b
    for lab in labels:
        sigma.setdefault(lab, lab)
    return sigma


def _custom_preset(cfg):
    labels = cfg["labels"].split()
    rows = [r.strip() for r in cfg["form"].split(";") if r.strip()]
    form = [[int(x) for x in row.split()] for row in rows]
    datum = cartan_datum(labels, form)
    if "sigma" in cfg:
        fd = validate_admissible(datum, _parse_sigma_cycles(cfg["sigma"], datum.labels))
    else:
        fd = identity_folding(datum)
    if "word" in cfg:
        word = tuple(cfg["word"].split())
    elif "parts" in cfg:
        part0, part1 = (p.split() for p in cfg["parts"].split(";"))
        word = bipartite_w0(datum, (part0, part1))
    else:
        raise ConfigError("custom data need either word=... or parts=I0;I1")
    seq = betas_from_sequence(datum, word)
    ulword = tuple(fd.quotient.labels[k] for k, _ in orbit_blocks(fd, seq))
    ulseq = betas_from_sequence(fd.quotient, ulword)
    orientation = None
    if "parts" in cfg:
        part0 = cfg["parts"].split(";")[0].split()
        orientation = validate_orientation(datum, Orientation(tuple(
            (b, a) if a in part0 else (a, b) for a, b in datum.edges())))
    return Preset("custom", fd, seq, ulseq, orientation, ((), ()), False)


def _resolve(args, cfg):
    preset_name = args.preset or cfg.get("preset")
    fold_name = args.fold or cfg.get("fold")
    if fold_name:
        preset = get_folding(fold_name)
        src = fold_name.split("->")[0].strip()
        if preset_name and preset_name not in (src, preset.name):
            raise ConfigError(f"preset {preset_name} does not match fold {fold_name}")
        return preset
    if not preset_name:
        if "labels" in cfg and "form" in cfg:
            return _custom_preset(cfg)
        raise ConfigError("a --preset, --fold, or custom datum is required")
    return get_preset(preset_name)


def _setup(preset, basis):
    if basis is None:
        basis = "folded" if preset.is_quotient else "modified"
    if basis == "folded" and not preset.is_quotient and preset.fd.is_trivial():
        raise ConfigError("the folded basis needs a folded preset or a folding")
    if basis == "symmetric" and (preset.is_quotient
                                 or not preset.fd.base.is_symmetric()):
        raise ConfigError("the plain symmetric basis needs a symmetric datum")
    return Setup(preset.fd, preset.seq, preset.ulseq, preset.orientation, basis)


def _parse_weight(text, datum):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != datum.rank:
        raise ConfigError(f"weight needs {datum.rank} coordinates "
                          f"for labels {', '.join(datum.labels)}")
    try:
        gamma = tuple(int(p) for p in parts)
    except ValueError as exc:
        raise ConfigError(f"bad weight {text!r}") from exc
    if any(g < 0 for g in gamma):
        raise ConfigError("weight coordinates must be nonnegative")
    return gamma


def _weights(args, cfg, datum):
    weight = args.weight or cfg.get("weight")
    if weight:
        return [_parse_weight(weight, datum)]
    height = args.max_height or cfg.get("max-height")
    if height is None:
        raise ConfigError("give --weight or --max-height")
    return weights_up_to(datum, int(height))


def _root_str(datum, v):
    return " ".join(tok for lab, n in zip(datum.labels, v) for tok in [lab] * n) or "0"


def _emit(args, payload, pretty_lines, tsv):
    fmt = args.format
    if fmt == "json":
        payload = {k: v for k, v in payload.items() if not k.startswith("_")}
        text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    elif fmt == "tsv":
        text = tsv
    else:
        text = "\n".join(pretty_lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_roots(args, cfg):
    preset = _resolve(args, cfg)
    fd = preset.fd
    datum, seq = (fd.quotient, preset.ulseq) if preset.is_quotient \
        else (fd.base, preset.seq)
    lines = [f"preset {preset.name}: {datum.rank} generators, "
             f"{seq.N} positive roots",
             "word: " + " ".join(seq.indices)]
    for k, beta in enumerate(seq.betas):
        lines.append(f"beta_{k + 1} = {_root_str(datum, beta)}")
    payload = {
        "preset": preset.name,
        "labels": list(datum.labels),
        "word": list(seq.indices),
        "betas": [list(b) for b in seq.betas],
    }
    if not fd.is_trivial() and not preset.is_quotient:
        blocks = orbit_blocks(fd, preset.seq)
        payload["orbit_parts"] = [
            {"orbit": list(fd.orbits[k]), "positions": [p + 1 for p in positions]}
            for k, positions in blocks]
        lines.append("orbit parts: " + "  ".join(
            "{" + " ".join(fd.orbits[k]) + "}@" + ",".join(str(p + 1) for p in positions)
            for k, positions in blocks))
    rows = ["\t".join(["k", "label", "beta"])]
    rows += ["\t".join([str(k + 1), seq.indices[k], _root_str(datum, seq.betas[k])])
             for k in range(seq.N)]
    _emit(args, payload, lines, "\n".join(rows) + "\n")
    return 0


def cmd_gram(args, cfg):
    preset = _resolve(args, cfg)
    setup = _setup(preset, args.basis or cfg.get("basis"))
    datum, _seq = setup.active()
    results, pretty = [], []
    for gamma in _weights(args, cfg, datum):
        index, lam = gram_block(setup, gamma)
        words = [setup.word_for(c) for c in index]
        gammas = []
        for w in words:
            g = ONE
            for lab, e in w.letters:
                g = g * qfact(e, datum.d(lab))
            gammas.append(g)
        core = [[matching_sum(datum, expand_word(wa, datum).labels,
                              expand_word(wb, datum).labels)
                 for wb in words] for wa in words]
        delta = delta_weight(datum, words[0]) if words else ONE
        entry = {
            "weight": list(gamma),
            "labels": list(datum.labels),
            "basis": setup.basis,
            "index": [list(c) for c in index],
            "words": [str(w) for w in words],
            "lambda": [[str(v) for v in row] for row in lam],
            "core": [[str(v) for v in row] for row in core],
            "delta": str(delta),
            "gamma_factors": [str(g) for g in gammas],
        }
        pretty.append(f"weight {gamma} ({setup.basis}): {len(index)} vectors")
        for c, row in zip(index, lam):
            pretty.append(f"  {c}: " + "  |  ".join(str(v) for v in row))
        if not preset.fd.is_trivial() and setup.basis != "folded":
            sub_index, sub = sigma_submatrix(preset.fd, preset.seq, index, lam)
            entry["index_sigma"] = [list(c) for c in sub_index]
            entry["lambda_sigma"] = [[str(v) for v in row] for row in sub]
            pretty.append(f"  fixed part: {len(sub_index)} vectors")
            for c, row in zip(sub_index, sub):
                pretty.append(f"  {c}: " + "  |  ".join(str(v) for v in row))
        results.append(entry)
    payload = results[0] if len(results) == 1 else {"blocks": results}
    rows = []
    for entry in results:
        rows.append("# weight\t" + ",".join(str(x) for x in entry["weight"]))
        for crow, lrow in zip(entry["index"], entry["lambda"]):
            rows.append("\t".join([",".join(str(x) for x in crow)] + lrow))
    _emit(args, payload, pretty, "\n".join(rows) + "\n")
    return 0


def cmd_transition(args, cfg):
    preset = _resolve(args, cfg)
    setup = _setup(preset, args.basis or cfg.get("basis"))
    datum, _seq = setup.active()
    results, pretty, tsv_parts = [], [], []
    for gamma in _weights(args, cfg, datum):
        block = pipeline(setup, gamma)
        data = block_to_json(block, datum.labels)
        data["preset"] = preset.name
        data["basis"] = setup.basis
        results.append(data)
        tsv_parts.append(block_to_tsv(block, datum.labels))
        pretty.append(f"weight {gamma} ({setup.basis}): {len(block.index)} vectors")
        for name in ("index", "H", "D", "P", "Q"):
            pretty.append(f"{name}:")
            value = data[name]
            if name in ("index", "D"):
                for item in value:
                    pretty.append(f"  {item}")
            else:
                for row in value:
                    pretty.append("  [" + ",  ".join(row) + "]")
    payload = results[0] if len(results) == 1 else {"blocks": results}
    _emit(args, payload, pretty, "".join(tsv_parts))
    return 0


def cmd_check(args, cfg):
    suite_names = [args.suite] if args.suite != "all" else list(SUITES)
    overall_ok = True
    for name in suite_names:
        kwargs = {}
        height = args.max_height or cfg.get("max-height")
        if height:
            kwargs["max_height"] = int(height)
        preset = args.preset or cfg.get("preset")
        fold = args.fold or cfg.get("fold")
        if preset and name in ("oracle", "factorization", "delta"):
            kwargs["presets"] = [preset]
        if fold and name in ("restriction", "congruence", "equivariance"):
            kwargs["folds"] = [fold]
        result = SUITES[name](**kwargs)
        print(result)
        overall_ok = overall_ok and result.ok
    return 0 if overall_ok else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qfold",
        description="Exact transition matrices between PBW, monomial and "
                    "canonical bases, with foldings.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, weights=True):
        p.add_argument("--config", help="key=value file mirroring the flags")
        p.add_argument("--preset")
        p.add_argument("--fold")
        p.add_argument("--basis", choices=("modified", "folded", "symmetric"))
        p.add_argument("--format", choices=("json", "tsv", "pretty"),
                       default="json")
        p.add_argument("--out")
        if weights:
            p.add_argument("--weight")
            p.add_argument("--max-height", type=int, dest="max_height")

    common(sub.add_parser("roots", help="reduced word, root order, orbit parts"),
           weights=False)
    common(sub.add_parser("gram", help="Gram matrix of a weight block"))
    common(sub.add_parser("transition", help="full transition block"))
    p_check = sub.add_parser("check", help="run verification sweeps")
    p_check.add_argument("--config", help="key=value file mirroring the flags")
    p_check.add_argument("--suite", default="all",
                         choices=sorted(SUITES) + ["all"])
    p_check.add_argument("--preset")
    p_check.add_argument("--fold")
    p_check.add_argument("--max-height", type=int, dest="max_height")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _read_config(args.config) if args.config else {}
        if args.command == "roots":
            return cmd_roots(args, cfg)
        if args.command == "gram":
            return cmd_gram(args, cfg)
        if args.command == "transition":
            return cmd_transition(args, cfg)
        return cmd_check(args, cfg)
    except (MismatchError, SingularPivot, NotIntegral, IndexMismatch) as exc:
        print(f"internal invariant breach: {exc}", file=sys.stderr)
        return 3
    except (ConfigError, UnsupportedPreset, RootSystemError, OSError,
            KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
