"""Command-line interface. Every command prints one JSON document.

Exit codes: 0 success, 2 invalid input, 3 Undecided verdict (compare),
4 resource guard tripped.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import cohomology, quotients, rigidity
from .errors import ResourceGuardExceeded, SeifertError
from .monodromy import classify_monodromy
from .seifert import (
    SeifertData,
    classify_geometry,
    euler_number,
    normalize,
    orbifold_euler_char,
    presentation,
    validate,
)

EXIT_OK, EXIT_INVALID, EXIT_UNDECIDED, EXIT_GUARD = 0, 2, 3, 4
REQUIRED_KEYS = {"genus", "cone_points", "obstruction"}
ALLOWED_KEYS = REQUIRED_KEYS | {"monodromy"}


class InputError(Exception):
    def __init__(self, message, diagnostics=()):
        super().__init__(message)
        self.diagnostics = list(diagnostics)


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def parse_manifold(obj) -> SeifertData:
    if not isinstance(obj, dict):
        raise InputError("manifold file must hold a JSON object")
    keys = set(obj)
    if not REQUIRED_KEYS <= keys or not keys <= ALLOWED_KEYS:
        raise InputError(f"keys must be {sorted(REQUIRED_KEYS)} plus optional 'monodromy', got {sorted(keys)}")
    genus, cones, obstruction = obj["genus"], obj["cone_points"], obj["obstruction"]
    if not _is_int(genus):
        raise InputError("genus must be an integer")
    if not isinstance(cones, list) or not all(
        isinstance(c, list) and len(c) == 3 and all(map(_is_int, c)) for c in cones
    ):
        raise InputError("cone_points must be a list of [m, a, b] integer triples")
    if not (isinstance(obstruction, list) and len(obstruction) == 2 and all(map(_is_int, obstruction))):
        raise InputError("obstruction must be an integer pair [a, b]")
    mono = obj.get("monodromy")
    if mono is not None:
        ok = isinstance(mono, list) and all(
            isinstance(A, list) and len(A) == 2 and all(isinstance(r, list) and len(r) == 2 and all(map(_is_int, r)) for r in A)
            for A in mono
        )
        if not ok:
            raise InputError("monodromy must be a list of 2x2 integer matrices")
    if genus < 0:
        raise InputError("genus must be nonnegative")
    return SeifertData.make(genus, cones, obstruction, mono)


def load_manifold(path: str, check: bool = True) -> SeifertData:
    try:
        obj = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    data = parse_manifold(obj)
    if check:
        problems = validate(data)
        if problems:
            raise InputError(problems[0], problems)
    return data


def manifold_json(data: SeifertData) -> dict:
    out = {
        "genus": data.genus,
        "cone_points": [list(c) for c in data.cone_points],
        "obstruction": list(data.obstruction),
    }
    if not data.has_trivial_monodromy:
        out["monodromy"] = [A.tolist() for A in data.monodromy]
    return out


def _q(x: Fraction) -> str:
    return str(x)


def cmd_validate(args):
    data = load_manifold(args.file, check=False)
    problems = validate(data)
    return {"valid": not problems, "diagnostics": problems}, (EXIT_OK if not problems else EXIT_INVALID)


def cmd_classify(args):
    data = load_manifold(args.file)
    report = {
        "geometry": classify_geometry(data).value,
        "chi_orb": _q(orbifold_euler_char(data)),
        "euler": [_q(x) for x in euler_number(data)] if data.has_trivial_monodromy else None,
        "monodromy": classify_monodromy(data.monodromy).kind.value,
    }
    return report, EXIT_OK


def cmd_canon(args):
    return manifold_json(normalize(load_manifold(args.file))), EXIT_OK


def cmd_present(args):
    p = presentation(load_manifold(args.file))
    return {"generators": list(p.generators), "relators": [p.format_relator(w) for w in p.relators]}, EXIT_OK


def _verdict_json(v: rigidity.Verdict) -> dict:
    out = {"verdict": v.tag.value}
    if v.tag == rigidity.Tag.ISOMORPHIC:
        out["k"] = v.k
        out["units"] = list(v.units)
        out["witness"] = v.witness.moves.to_json()
        out["target"] = manifold_json(v.witness.target)
    else:
        out["reason"] = v.reason
    return out


def cmd_compare(args):
    M, N = load_manifold(args.file1), load_manifold(args.file2)
    try:
        v = rigidity.compare(M, N)
    except SeifertError as exc:
        raise InputError(str(exc)) from None
    report = _verdict_json(v)
    if args.census:
        catalog = quotients.load_catalog(args.catalog)
        spectra = [quotients.census(presentation(d), catalog) for d in (M, N)]
        report["spectra"] = [s.to_json() for s in spectra]
        report["spectra_equal"] = spectra[0] == spectra[1]
    code = EXIT_UNDECIDED if v.tag == rigidity.Tag.UNDECIDED else EXIT_OK
    return report, code


def cmd_cohomology(args):
    data = load_manifold(args.file)
    if args.t < 0:
        raise InputError("--t must be nonnegative")
    sig = cohomology.OrbSignature.of(data)
    report = {
        "signature": {"genus": sig.genus, "orders": list(sig.orders)},
        "t": args.t,
        "h2": list(cohomology.h2_structure(sig, args.t)),
    }
    if data.has_trivial_monodromy:
        c = cohomology.cocycle_of(data)
        if args.t:
            c = c.reduce(args.t)
        report["raw"] = [list(p) for p in c.raw]
        report["E"] = list(cohomology.euler_pairing(c))
    else:
        report["raw"] = None
        report["E"] = None
    return report, EXIT_OK


def cmd_census(args):
    data = load_manifold(args.file)
    catalog = quotients.load_catalog(args.catalog)
    spectrum = quotients.census(presentation(data), catalog)
    return {"spectrum": spectrum.to_json()}, EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="seifert4", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, fn in [("validate", cmd_validate), ("classify", cmd_classify), ("canon", cmd_canon), ("present", cmd_present)]:
        p = sub.add_parser(name)
        p.add_argument("file")
        p.set_defaults(func=fn)
    p = sub.add_parser("compare")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--census", action="store_true")
    p.add_argument("--catalog", default=None, help="catalog file (default: shipped catalog)")
    p.set_defaults(func=cmd_compare)
    p = sub.add_parser("cohomology")
    p.add_argument("file")
    p.add_argument("--t", type=int, required=True)
    p.set_defaults(func=cmd_cohomology)
    p = sub.add_parser("census")
    p.add_argument("file")
    p.add_argument("--catalog", default=None, help="catalog file (default: shipped catalog)")
    p.set_defaults(func=cmd_census)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report, code = args.func(args)
    except InputError as exc:
        report, code = {"error": str(exc), "diagnostics": exc.diagnostics}, EXIT_INVALID
    except quotients.CatalogError as exc:
        report, code = {"error": f"catalog: {exc}"}, EXIT_INVALID
    except ResourceGuardExceeded as exc:
        report, code = {"error": f"resource guard: {exc}"}, EXIT_GUARD
    sys.stdout.write(json.dumps(report, indent=2) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
