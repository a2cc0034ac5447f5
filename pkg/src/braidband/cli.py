"""
Command-line front end.

    braidband normal-form --n 3 --word "1 2 1"
    braidband equal --n 3 --word "1 2 1" --word2 "2 1 2"
    braidband conjugate --n 3 --word "1" --word2 "2"
    braidband is-band --n 4 --word "-3 2 1 -2 3"
    braidband band-search --n 4 --word "1 2 3"
    braidband surface --file band.json
    braidband profile-check --file profile.json
    braidband obstruct --n 2 --word "1 1 1" --phi abs-writhe
    braidband slice-check --n 2 --word "1 1 1" --phi abs-writhe --q-max 3

Exit status: 0 success, 1 domain error, 2 budget exhausted, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import annular_pl, bands, garside, obstruction, surface
from .braid_core import BraidError, BraidWord, parse_word, serialize

EXIT_OK, EXIT_DOMAIN, EXIT_BUDGET, EXIT_USAGE = 0, 1, 2, 64

DEFAULTS = {
    "garside": {"orbit_budget": garside.DEFAULT_ORBIT_BUDGET},
    "bands": {"max_bands": 8, "max_conjugator_length": 6},
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _rational(x: Fraction):
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise BraidError(f"{path} is not valid JSON: {exc}") from None


def _word_from_file(path: str) -> BraidWord:
    data = _load_json(path)
    try:
        letters = data["word"]
        n = int(data["strands"])
    except (KeyError, TypeError, ValueError):
        raise BraidError(f"{path}: expected {{\"strands\": n, \"word\": ...}}") from None
    if isinstance(letters, str):
        return parse_word(letters, n)
    return BraidWord(n, tuple(letters))


def _get_word(args, which: str = "word") -> BraidWord:
    text = getattr(args, which, None)
    path = getattr(args, "file", None) if which == "word" else None
    if (text is None) == (path is None):
        raise UsageError(f"give exactly one of --{which} or --file")
    if path is not None:
        return _word_from_file(path)
    if args.n is None:
        raise UsageError("--n is required with an inline word")
    return parse_word(text, args.n)


def _budgets(args) -> dict:
    cfg = json.loads(json.dumps(DEFAULTS))
    if args.config:
        user = _load_json(args.config)
        for section, values in user.items():
            if section in cfg and isinstance(values, dict):
                cfg[section].update(values)
    if getattr(args, "orbit_budget", None) is not None:
        cfg["garside"]["orbit_budget"] = args.orbit_budget
    if getattr(args, "max_bands", None) is not None:
        cfg["bands"]["max_bands"] = args.max_bands
    if getattr(args, "max_conjugator_length", None) is not None:
        cfg["bands"]["max_conjugator_length"] = args.max_conjugator_length
    return cfg


def _threads() -> int:
    raw = os.environ.get("BRAIDBAND_THREADS")
    if raw is None:
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"BRAIDBAND_THREADS must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise UsageError(f"BRAIDBAND_THREADS must be a positive integer, got {raw!r}")
    return value


def _phi(args) -> obstruction.PhiInvariant:
    name = args.phi
    if name == "writhe":
        return obstruction.writhe_phi()
    if name == "abs-writhe":
        return obstruction.abs_writhe_phi()
    if name == "components":
        return obstruction.components_phi()
    if name == "endpoint":
        if args.s is None:
            raise UsageError("--phi endpoint needs --s")
        try:
            s_value = Fraction(args.s)
        except ValueError:
            raise UsageError(f"--s must be a rational number, got {args.s!r}") from None
        return obstruction.endpoint_phi(s_value)
    if name == "profile":
        if args.profile is None:
            raise UsageError("--phi profile needs --profile FILE")
        return obstruction.profile_gap_phi(annular_pl.PLProfile.from_json(_load_json(args.profile)))
    raise UsageError(f"unknown invariant {name!r}")


# -- subcommands ------------------------------------------------------------
# each returns (exit status, json payload, text lines)


def cmd_normal_form(args, cfg):
    w = _get_word(args)
    nf = garside.normal_form(w)
    payload = {
        "braid": serialize(w),
        "n": w.strands,
        "infimum": nf.infimum,
        "factors": [list(garside.simple_word(f)) for f in nf.factors],
        "word": serialize(nf.to_word()),
    }
    return EXIT_OK, payload, [str(nf), payload["word"]]


def cmd_equal(args, cfg):
    a, b = _get_word(args), _get_word(args, "word2")
    eq = garside.words_equal(a, b)
    payload = {"n": a.strands, "word": serialize(a), "word2": serialize(b), "equal": eq}
    return EXIT_OK, payload, ["equal" if eq else "not equal"]


def cmd_conjugate(args, cfg):
    a, b = _get_word(args), _get_word(args, "word2")
    ok, g = garside.conjugacy_test(a, b, cfg["garside"]["orbit_budget"])
    payload = {
        "n": a.strands,
        "word": serialize(a),
        "word2": serialize(b),
        "conjugate": ok,
        "witness": serialize(g) if g is not None else None,
    }
    lines = [f"conjugate, witness: {serialize(g)}" if ok else "not conjugate"]
    return EXIT_OK, payload, lines


def cmd_is_band(args, cfg):
    w = _get_word(args)
    kind = garside.is_band(w, cfg["garside"]["orbit_budget"])
    return EXIT_OK, {"n": w.strands, "word": serialize(w), "band": kind}, [kind]


def cmd_band_search(args, cfg):
    w = _get_word(args)
    b = cfg["bands"]
    bracket = bands.band_rank_bracket(w, b["max_bands"], b["max_conjugator_length"])
    payload = {"n": w.strands, "word": serialize(w), **bracket.to_json()}
    lines = [f"{bracket.lower} <= rk <= {bracket.upper}" + (" (exact)" if bracket.exact else "")]
    for band in bracket.witness.bands:
        lines.append(f"  sign {band.sign:+d}  conjugator [{serialize(band.conjugator)}]")
    return (EXIT_OK if bracket.exact else EXIT_BUDGET), payload, lines


def cmd_surface(args, cfg):
    if args.file is None:
        raise UsageError("surface needs --file with a band presentation")
    p = bands.BandPresentation.from_json(_load_json(args.file))
    summary = surface.ribbon_summary(surface.build_surface(p))
    lines = [
        f"{summary['strands']} disks, {summary['band_count']} bands, "
        f"chi = {summary['euler_characteristic']}, "
        f"{summary['boundary_components']} boundary component(s)"
    ]
    for b in summary["bands"]:
        lines.append(
            f"  band {b['index']}: D{b['attach'][0]} - D{b['attach'][1]}, "
            f"singularities {b['singularities']}, self-intersections {b['self_intersections']}"
        )
    lines.append(f"total ribbon singularities: {summary['total_singularities']}")
    return EXIT_OK, summary, lines


def cmd_profile_check(args, cfg):
    if args.file is None:
        raise UsageError("profile-check needs --file")
    f = annular_pl.PLProfile.from_json(_load_json(args.file))
    value, where = annular_pl.max_gap(f)
    n = f.strands
    payload = {
        "strands": n,
        "valid": True,
        "start": _rational(f.values[0]),
        "end": _rational(f.values[-1]),
        "max_gap": _rational(value),
        "max_gap_at": _rational(where),
        "gap_at_0": _rational(annular_pl.gap(f, 0)),
        "gap_at_1": _rational(annular_pl.gap(f, 1)),
        "band_rank_bound": _rational(annular_pl.band_rank_bound_from_profile(f)),
        "endpoint_max": annular_pl.endpoint_max_holds(f) if f.values[0] == -1 else None,
    }
    lines = [
        f"admissible profile on {n} strands",
        f"max gap {payload['max_gap']} at t = {payload['max_gap_at']}",
        f"band rank >= {payload['band_rank_bound']}",
    ]
    if payload["endpoint_max"] is not None:
        lines.append(f"endpoint maximum: {'holds' if payload['endpoint_max'] else 'FAILS'}")
    return EXIT_OK, payload, lines


def cmd_obstruct(args, cfg):
    w = _get_word(args)
    v = obstruction.ribbon_obstruction(_phi(args), w)
    payload = v.to_json()
    return EXIT_OK, payload, [f"{v.verdict}: {v.phi} = {_rational(v.phi_value)}, threshold {v.threshold}"] + [
        f"  {e}" for e in v.evidence
    ]


def cmd_slice_check(args, cfg):
    w = _get_word(args)
    report = obstruction.slice_consistency(_phi(args), w, args.q_max)
    payload = report.to_json()
    lines = [f"{row['q']}: phi {row['phi_value']} vs bound {row['bound']}" + ("  VIOLATED" if row["violated"] else "")
             for row in payload["rows"]]
    lines.append(payload["verdict"])
    return EXIT_OK, payload, lines


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="braidband", description="Band presentations, banded surfaces and ribbon obstructions.")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--config", help="JSON config, e.g. {\"garside\": {\"orbit_budget\": 1000}}")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, func, help_, word=True, word2=False):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=func)
        p.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
        p.add_argument("--config", default=argparse.SUPPRESS)
        p.add_argument("--file")
        if word:
            p.add_argument("--n", type=int)
            p.add_argument("--word")
        if word2:
            p.add_argument("--word2")
        return p

    add("normal-form", cmd_normal_form, "Garside left normal form")
    add("equal", cmd_equal, "word problem", word2=True)
    p = add("conjugate", cmd_conjugate, "conjugacy problem", word2=True)
    p.add_argument("--orbit-budget", type=int)
    p = add("is-band", cmd_is_band, "is the braid conjugate to sigma_1^{+-1}")
    p.add_argument("--orbit-budget", type=int)
    p = add("band-search", cmd_band_search, "bracket the band rank")
    p.add_argument("--max-bands", type=int)
    p.add_argument("--max-conjugator-length", type=int)
    add("surface", cmd_surface, "braided banded surface of a band presentation", word=False)
    add("profile-check", cmd_profile_check, "validate a PL profile and locate its maximum gap", word=False)
    for name, func in (("obstruct", cmd_obstruct), ("slice-check", cmd_slice_check)):
        p = add(name, func, "ribbon obstruction test" if name == "obstruct" else "slice consistency test")
        p.add_argument(
            "--phi",
            choices=("writhe", "abs-writhe", "components", "profile", "endpoint"),
            default="components" if name == "obstruct" else "abs-writhe",
        )
        p.add_argument("--profile", help="profile JSON for --phi profile")
        p.add_argument("--s", help="s-invariant value for --phi endpoint")
        if name == "slice-check":
            p.add_argument("--q-max", type=int, default=3)
    return parser


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError(parser.format_usage().rstrip())
        _threads()
        cfg = _budgets(args)
        status, payload, lines = args.func(args, cfg)
    except UsageError as exc:
        print(str(exc).rstrip(), file=err)
        return EXIT_USAGE
    except garside.BudgetExceeded as exc:
        print(f"budget exhausted: {exc}", file=err)
        return EXIT_BUDGET
    except (BraidError, annular_pl.ProfileError, obstruction.ObstructionError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_DOMAIN
    if args.format == "json":
        print(json.dumps(payload, indent=2), file=out)
    else:
        print("\n".join(lines), file=out)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
