"""Command-line interface: ``mapcount <subcommand> ...``.

Exit status is 0 on success, 1 when a verification finds a mismatch and 2 on
usage errors.  Output depends only on the flags.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

from . import asymptotics
from .census import DEFAULT_MAX_DARTS, CensusLimitError, DartSystem, census, census_system
from .coefficients import (CoefficientError, Family, LaurentVector, ModelSpec, builtin_keys,
                           export_vector, import_vector, load_builtin)
from .four_valent import FastPathError, conjecture_check, count_contraction
from .hypergeometric import HypergeometricError, count_e1, count_e_hg, count_z_hg
from .recurrence import RecurrenceError, advance, count_recurrence, invert_step
from .series import count_e1_series, count_series, genus0_two_legged
from .tables import table_count

METHODS = ("auto", "recurrence", "fourvalent", "hypergeom", "series")
OK, MISMATCH, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- counting ---------------------------------------------------------------

def read_vector(path: str) -> LaurentVector:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return import_vector(text)


def initial_vector(spec: ModelSpec, v: LaurentVector | None = None) -> LaurentVector:
    """Vector at order ``j_G``, from ``v`` or the builtin data."""
    if v is None:
        if spec.nu != 2 or (spec.family, spec.genus) not in builtin_keys():
            raise UsageError(
                f"no builtin coefficients for {spec.family.value} nu={spec.nu} g={spec.genus};"
                " supply them with --coeffs FILE")
        return load_builtin(spec.family, spec.genus)
    if v.spec != spec:
        raise UsageError(f"imported coefficients are for {v.spec}, not {spec}")
    if v.is_e_function:
        v = advance(v)
    while v.deriv_order > spec.j_init:
        v = invert_step(v)
    return v


def count(family: Family, nu: int, genus: int, j: int, method: str = "auto",
          vector: LaurentVector | None = None) -> int:
    if j < 0:
        raise UsageError("vertices must be >= 0")
    if genus == 0:
        if family is not Family.TWO_LEGGED or method not in ("auto", "series"):
            raise UsageError("genus 0 is available for the two-legged family via the series method only")
        return genus0_two_legged(nu, j)
    spec = ModelSpec(family, nu, genus)
    if family is Family.REGULAR and j < 1:
        raise UsageError("regular counts need vertices >= 1")
    if family is Family.REGULAR and genus == 1:
        if method in ("recurrence", "fourvalent"):
            raise UsageError(
                f"method {method} does not apply to regular genus 1 (j_G exceeds beta - 1);"
                " it is counted by the genus-one hypergeometric formula (use --method auto or hypergeom)")
        if vector is not None:
            raise UsageError("regular genus 1 takes no coefficient data")
        return count_e1_series(nu, j) if method == "series" else count_e1(nu, j)
    v = initial_vector(spec, vector)
    if method == "auto":
        method = "fourvalent" if nu == 2 and spec.fast_path_valid else "hypergeom"
    if method == "fourvalent":
        try:
            return count_contraction(spec, v, j)
        except FastPathError as exc:
            raise UsageError(str(exc)) from None
    if method == "recurrence":
        return count_recurrence(spec, v, j)
    if method == "series":
        return count_series(spec, v, j)
    if method == "hypergeom":
        if family is Family.TWO_LEGGED:
            return count_z_hg(nu, genus, j, v if v.deriv_order == 0 else invert_step(v))
        return count_e_hg(nu, genus, j, v)
    raise UsageError(f"unknown method {method!r}")


def _count_cmd(args) -> int:
    vector = read_vector(args.coeffs) if args.coeffs else None
    print(count(Family.parse(args.family), args.nu, args.genus, args.vertices, args.method, vector))
    return OK


# -- table --------------------------------------------------------------------

def _table_cmd(args) -> int:
    family = Family.parse(args.family)
    rows = []
    for g in range(1, args.genus_max + 1):
        for j in range(1, args.vertices_max + 1):
            rows.append((family.value, g, j, count(family, args.nu, g, j)))
    if args.json:
        print(json.dumps([dict(zip(("family", "genus", "j", "count"), r)) for r in rows], indent=2))
    else:
        print("family,genus,j,count")
        for r in rows:
            print(",".join(map(str, r)))
    return OK


# -- verify -------------------------------------------------------------------

@dataclass
class Mismatch:
    family: str
    genus: int
    j: int
    values: dict[str, object]

    def describe(self) -> str:
        vals = " ".join(f"{k}={v}" for k, v in self.values.items())
        return f"MISMATCH family={self.family} genus={self.genus} j={self.j}: {vals}"


def _attempt(fn: Callable[[], int]):
    try:
        return fn()
    except (ArithmeticError, CoefficientError, UsageError, ValueError) as exc:
        return f"error({exc})"


def _method_values(family: Family, g: int, j: int, vector) -> dict[str, object]:
    values: dict[str, object] = {"table": table_count(family.value, g, j)}
    if family is Family.REGULAR and g == 1:
        values["hypergeom"] = _attempt(lambda: count_e1(2, j))
        values["series"] = _attempt(lambda: count_e1_series(2, j))
        return values
    for method in METHODS[1:]:
        values[method] = _attempt(lambda m=method: count(family, 2, g, j, m, vector))
    return values


def _census_values(g_max: int, j_max: int, max_darts: int):
    """Yield ``(family, genus, j, census, analytic)`` where a census fits the dart limit."""
    for family in (Family.TWO_LEGGED, Family.REGULAR):
        for j in range(1, j_max + 1):
            system = DartSystem.build(2, j, family)
            if system.dart_count > max_darts:
                continue
            result = census_system(system, max_darts)
            g_lo = 0 if family is Family.TWO_LEGGED else 1
            for g in range(g_lo, g_max + 1):
                analytic = genus0_two_legged(2, j) if g == 0 else count(family, 2, g, j)
                yield family.value, g, j, result.by_genus.get(g, 0), analytic


def verify(g_max: int, j_max: int, with_census: bool = False,
           overrides: dict | None = None, max_darts: int = DEFAULT_MAX_DARTS):
    """Compare every method with the reference rows; returns (report lines, first mismatch, tuples)."""
    if not 1 <= g_max <= 7 or j_max < 1:
        raise UsageError("verify needs 1 <= gmax <= 7 and jmax >= 1")
    overrides = overrides or {}
    lines, first, checked = [], None, 0
    for family in (Family.TWO_LEGGED, Family.REGULAR):
        for g in range(1, g_max + 1):
            vector = overrides.get((family, g))
            bad = 0
            for j in range(1, j_max + 1):
                values = _method_values(family, g, j, vector)
                checked += 1
                if len(set(values.values())) != 1:
                    bad += 1
                    if first is None:
                        first = Mismatch(family.value, g, j, values)
            names = ",".join(values)
            status = "agree" if not bad else f"{bad} mismatches"
            lines.append(f"{family.value} g={g} j=1..{j_max} [{names}]: {status}")
    if with_census:
        skipped = [f"{f.value} j={j}" for f in (Family.TWO_LEGGED, Family.REGULAR)
                   for j in range(1, j_max + 1)
                   if DartSystem.build(2, j, f).dart_count > max_darts]
        bad = 0
        for fam, g, j, seen, analytic in _census_values(g_max, j_max, max_darts):
            checked += 1
            if seen != analytic:
                bad += 1
                if first is None:
                    first = Mismatch(fam, g, j, {"census": seen, "analytic": analytic})
        note = f" (skipped over {max_darts} darts: {', '.join(skipped)})" if skipped else ""
        lines.append(f"census: {'agree' if not bad else f'{bad} mismatches'}{note}")
    return lines, first, checked


def _verify_cmd(args) -> int:
    overrides = {}
    for path in args.coeffs or []:
        v = read_vector(path)
        overrides[(v.spec.family, v.spec.genus)] = v
    lines, first, checked = verify(args.gmax, args.jmax, args.with_census, overrides)
    if args.json:
        print(json.dumps({
            "tuples": checked,
            "ok": first is None,
            "first_mismatch": None if first is None else {
                "family": first.family, "genus": first.genus, "j": first.j,
                "values": {k: str(v) for k, v in first.values.items()}},
        }, indent=2))
    else:
        for line in lines:
            print(line)
        print(f"{checked} tuples checked: " + ("all methods agree" if first is None else first.describe()))
    return OK if first is None else MISMATCH


# -- conjecture -----------------------------------------------------------------

def _conjecture_cmd(args) -> int:
    if args.lmax < 0 or args.gmax < 1 or args.jmax < 1:
        raise UsageError("need lmax >= 0, gmax >= 1, jmax >= 1")
    failures = [(ell, g, j) for ell in range(args.lmax + 1) for g in range(1, args.gmax + 1)
                for j in range(1, args.jmax + 1) if not conjecture_check(g, ell, j)]
    n = (args.lmax + 1) * args.gmax * args.jmax
    print(f"{n} tuples checked, {len(failures)} failures")
    for ell, g, j in failures:
        print(f"failure ell={ell} g={g} j={j}")
    return OK if not failures else MISMATCH


# -- census ---------------------------------------------------------------------

def _census_cmd(args) -> int:
    try:
        result = census(args.nu, args.vertices, Family.parse(args.family), args.max_darts)
    except CensusLimitError as exc:
        raise UsageError(str(exc)) from None
    print("genus,count")
    for g, k in result.by_genus.items():
        print(f"{g},{k}")
    print(f"disconnected,{result.disconnected}")
    print(f"total,{result.total}")
    return OK


# -- asymptotics ------------------------------------------------------------------

def _j_list(text: str) -> list[int]:
    try:
        values = [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if any(v < 1 for v in values):
        raise argparse.ArgumentTypeError("j values must be >= 1")
    return values


def _asymptotics_cmd(args) -> int:
    spec = ModelSpec(Family.parse(args.family), args.nu, args.genus)
    if args.nu != 2:
        raise UsageError("ratio tables need the nu = 2 closed forms")
    if spec.family is Family.REGULAR and spec.genus == 1:
        raise UsageError("regular asymptotics need genus >= 2")
    print(asymptotics.CSV_HEADER)
    for row in asymptotics.ratio_table(spec, args.j_list):
        print(row.csv())
    return OK


# -- coeffs -----------------------------------------------------------------------

def _coeffs_cmd(args) -> int:
    if args.import_file:
        v = read_vector(args.import_file)
    else:
        family, genus = args.export_builtin
        try:
            v = load_builtin(Family.parse(family), int(genus))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    sys.stdout.write(export_vector(v))
    return OK


# -- parser -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mapcount", description="Exact counts of 2nu-valent maps.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="one exact count")
    c.add_argument("--family", required=True, choices=("z", "e"))
    c.add_argument("--nu", type=int, required=True)
    c.add_argument("--genus", type=int, required=True)
    c.add_argument("--vertices", type=int, required=True)
    c.add_argument("--method", choices=METHODS, default="auto")
    c.add_argument("--coeffs", metavar="FILE")
    c.set_defaults(run=_count_cmd)

    t = sub.add_parser("table", help="CSV of counts")
    t.add_argument("--family", required=True, choices=("z", "e"))
    t.add_argument("--nu", type=int, default=2)
    t.add_argument("--genus-max", type=int, required=True)
    t.add_argument("--vertices-max", type=int, required=True)
    t.add_argument("--json", action="store_true")
    t.set_defaults(run=_table_cmd)

    v = sub.add_parser("verify", help="cross-check all methods")
    v.add_argument("--gmax", type=int, required=True)
    v.add_argument("--jmax", type=int, required=True)
    v.add_argument("--with-census", action="store_true")
    v.add_argument("--coeffs", metavar="FILE", action="append",
                   help="replace the builtin vector of that family and genus (repeatable)")
    v.add_argument("--json", action="store_true")
    v.set_defaults(run=_verify_cmd)

    k = sub.add_parser("conjecture", help="check the 2F1 / binomial-sum identity on a grid")
    k.add_argument("--lmax", type=int, required=True)
    k.add_argument("--gmax", type=int, required=True)
    k.add_argument("--jmax", type=int, required=True)
    k.set_defaults(run=_conjecture_cmd)

    m = sub.add_parser("census", help="brute-force matching census")
    m.add_argument("--nu", type=int, required=True)
    m.add_argument("--family", required=True, choices=("z", "e"))
    m.add_argument("--vertices", type=int, required=True)
    m.add_argument("--max-darts", type=int, default=DEFAULT_MAX_DARTS)
    m.set_defaults(run=_census_cmd)

    a = sub.add_parser("asymptotics", help="ratios of exact counts to the dominant term")
    a.add_argument("--family", required=True, choices=("z", "e"))
    a.add_argument("--nu", type=int, default=2)
    a.add_argument("--genus", type=int, required=True)
    a.add_argument("--j-list", type=_j_list, required=True)
    a.set_defaults(run=_asymptotics_cmd)

    f = sub.add_parser("coeffs", help="import or export coefficient documents")
    group = f.add_mutually_exclusive_group(required=True)
    group.add_argument("--import", dest="import_file", metavar="FILE")
    group.add_argument("--export-builtin", nargs=2, metavar=("FAMILY", "GENUS"))
    f.set_defaults(run=_coeffs_cmd)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except (UsageError, CoefficientError, FastPathError, CensusLimitError) as exc:
        print(f"mapcount: error: {exc}", file=sys.stderr)
        return USAGE
    except (RecurrenceError, HypergeometricError) as exc:
        # inconsistent coefficient data reached a method
        print(f"mapcount: error: {exc}", file=sys.stderr)
        return MISMATCH


if __name__ == "__main__":
    sys.exit(main())
