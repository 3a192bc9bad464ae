"""Command line entry points.

Five subcommands over the JSON formats of the library: generate (builtin
family tables), check (table, table set or sequence instance), solve
(recover an unknown table from exactness), mirror (fibration vs degeneration
correspondence), basechange (dual complex arithmetic).

Exit codes: 0 all checks pass, 1 a checked relation is violated, 2 the input
could not be used (bad spec string, malformed JSON, missing file, missing
flag).
"""

from __future__ import annotations

import functools
import json
import sys

import click

from .catalog import (DegenerationFamily, FibrationFamily, family_spec,
                      family_tables, parse_family)
from .checks import (VerificationReport, check_subvariety_constraints,
                     hard_lefschetz_check, validate_table)
from .dualcomplex import base_change, chain_counts, type_iii_counts
from .mirror import MirrorPair, mirror_check, stability_check
from .render import render_tables
from .sequences import RankPin, SequenceTemplate, check_sequence
from .solver import solve_unknown
from .tables import (TriFilteredTable, canonical_json, tables_from_json_obj,
                     tables_to_json_obj)

PASS, VIOLATION, INPUT_ERROR = 0, 1, 2


def _input_errors(f):
    """Turn malformed-input exceptions into exit code 2 on stderr."""

    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except (ValueError, KeyError, TypeError, OSError) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(INPUT_ERROR)

    return wrapper


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_json(path: str):
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path) as fh:
            text = fh.read()
    return json.loads(text)


def _resolve_tables(refs) -> dict[str, TriFilteredTable]:
    """Expand a "tables" list: family spec strings pull in the whole builtin
    set, objects are inline tables (or nested table sets)."""
    if not isinstance(refs, list):
        raise ValueError('"tables" must be a list of family specs or table objects')
    tables: dict[str, TriFilteredTable] = {}
    for ref in refs:
        if isinstance(ref, str):
            new = family_tables(parse_family(ref))
        elif isinstance(ref, dict) and "tables" in ref:
            new = tables_from_json_obj(ref)
        elif isinstance(ref, dict):
            t = TriFilteredTable.from_json_obj(ref)
            new = {t.space.tag: t}
        else:
            raise ValueError(f"bad table reference {ref!r}")
        for tag, t in new.items():
            if tag in tables:
                raise ValueError(f"duplicate table for space {tag}")
            tables[tag] = t
    return tables


def _parse_pins(obj, template: SequenceTemplate) -> list[RankPin]:
    return [RankPin.from_json_obj(p, len(template.terms))
            for p in obj.get("pins", [])]


def _check_table_set(tables: dict[str, TriFilteredTable]) -> VerificationReport:
    rep = VerificationReport()
    for tag in sorted(tables):
        rep.extend(validate_table(tables[tag]))
        rep.extend(hard_lefschetz_check(tables[tag]))
    sections = [t for t in tables.values() if t.space.kind == "Z"]
    if "Y" in tables and sections:
        rep.extend(check_subvariety_constraints(tables["Y"], sections))
    return rep


@click.group()
def main():
    """Verify and solve trigraded cohomology dimension tables."""


@main.command()
@click.argument("family")
@click.option("--format", "fmt", type=click.Choice(["json", "grid"]),
              default="json", show_default=True, help="Output form.")
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="Write to a file instead of standard output.")
@_input_errors
def generate(family, fmt, out):
    """Emit the tables of a builtin family.

    FAMILY is a spec string: k3-elliptic:r=3, k3-finite:g=4, k3-typeII:r=3,
    k3-typeIII:k=2.
    """
    fam = parse_family(family)
    tables = family_tables(fam)
    if fmt == "json":
        text = canonical_json(tables_to_json_obj(tables, family_spec(fam)))
    else:
        text = render_tables(tables)
    _emit(text, out)


@main.command()
@click.argument("input", type=str)
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="Write the report to a file instead of standard output.")
@_input_errors
def check(input, out):
    """Check a JSON input; report violations.

    INPUT is a path (or - for standard input) holding one of: a sequence
    object {"template", "tables", "pins"?}, checked for lane exactness; a
    table set {"tables": [...]}, checked per table plus the section
    constraints when Y and its sections are present; a single table
    {"space", "n", "entries"}.
    """
    obj = _load_json(input)
    if not isinstance(obj, dict):
        raise ValueError("input must be a JSON object")
    if "template" in obj:
        template = SequenceTemplate.from_json_obj(obj["template"])
        tables = _resolve_tables(obj.get("tables", []))
        rep = check_sequence(template, tables, _parse_pins(obj, template))
    elif "tables" in obj:
        rep = _check_table_set(tables_from_json_obj(obj))
    elif "space" in obj:
        t = TriFilteredTable.from_json_obj(obj)
        rep = _check_table_set({t.space.tag: t})
    else:
        raise ValueError('input needs a "template", "tables" or "space" key')
    _emit(canonical_json(rep.to_json_obj()), out)
    sys.exit(PASS if rep.passed else VIOLATION)


@main.command()
@click.argument("input", type=str)
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="Write the result to a file instead of standard output.")
@_input_errors
def solve(input, out):
    """Solve for a table marked unknown in a sequence object.

    INPUT is a sequence object as for check, plus an "unknown" key: a space
    tag, or {"space": tag, "k": degree} to solve a single degree.  The
    result reports the solved table, whether it is fully determined, any
    cells the lanes leave open, and a contradiction if the known tables
    admit no exact completion.
    """
    obj = _load_json(input)
    if not isinstance(obj, dict) or "template" not in obj:
        raise ValueError('solve input needs "template", "tables" and "unknown" keys')
    if "unknown" not in obj:
        raise ValueError('no unknown marked: add an "unknown" key naming a space tag')
    template = SequenceTemplate.from_json_obj(obj["template"])
    tables = _resolve_tables(obj.get("tables", []))
    unk = obj["unknown"]
    if isinstance(unk, dict):
        unknown = (unk["space"], unk["k"]) if "k" in unk else unk["space"]
    else:
        unknown = unk
    result = solve_unknown(template, tables, unknown, _parse_pins(obj, template))
    out_obj = {
        "table": None if result.table is None else result.table.to_json_obj(),
        "determined": result.determined,
        "underdetermined": [
            {"entry": {"k": k, "l": l, "q": q, "p": p}, "lo": lo, "hi": hi}
            for (k, l, q, p), lo, hi in result.underdetermined
        ],
        "report": result.report.to_json_obj(),
    }
    _emit(canonical_json(out_obj), out)
    sys.exit(PASS if result.report.passed else VIOLATION)


@main.command()
@click.option("--fibration", required=True,
              help="Fibration family spec, e.g. k3-elliptic:r=3.")
@click.option("--degeneration", required=True,
              help="Degeneration family spec, e.g. k3-typeII:r=3.")
@click.option("--mu", type=int, default=None,
              help="Also check stability under a mu-fold base change.")
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="Write the report to a file instead of standard output.")
@_input_errors
def mirror(fibration, degeneration, mu, out):
    """Check the mirror correspondence between two builtin families."""
    fib = parse_family(fibration)
    deg = parse_family(degeneration)
    if not isinstance(fib, FibrationFamily):
        raise ValueError(f"--fibration needs a fibration family, got {fibration!r}")
    if not isinstance(deg, DegenerationFamily):
        raise ValueError(f"--degeneration needs a degeneration family, got {degeneration!r}")
    pair = MirrorPair.from_families(fib, deg)
    rep = mirror_check(pair) if mu is None else stability_check(pair, mu)
    _emit(canonical_json(rep.to_json_obj()), out)
    sys.exit(PASS if rep.passed else VIOLATION)


@main.command()
@click.option("--topology", type=click.Choice(["chain", "sphere"]), required=True)
@click.option("--components", type=int, default=None,
              help="Component count (chain topology).")
@click.option("--triple-points", "triple_points", type=int, default=None,
              help="Triple point count (sphere topology).")
@click.option("--mu", type=int, required=True, help="Base change degree.")
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="Write the counts to a file instead of standard output.")
@_input_errors
def basechange(topology, components, triple_points, mu, out):
    """Dual complex counts after a mu-fold base change."""
    if topology == "chain":
        if components is None or triple_points is not None:
            raise ValueError("chain topology takes --components only")
        d = chain_counts(components)
    else:
        if triple_points is None or components is not None:
            raise ValueError("sphere topology takes --triple-points only")
        d = type_iii_counts(triple_points)
    _emit(canonical_json(base_change(d, mu).to_json_obj()), out)


if __name__ == "__main__":
    main()
