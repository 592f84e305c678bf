"""Command-line interface: ``monosextic classify | scan | derive-tables | families | verify``.

Exit codes: 0 success or agreement, 1 verified disagreement, 2 usage error.
"""
from __future__ import annotations

import csv
import json
import os
import sys

import click

from . import families as fam
from .classify import GaloisLabel, Trinomial, classify
from .jks import derive_condition_tables, jks_prime_divides_index
from .numtheory import factorize
from .oracle import check_fingerprint, dedekind_divides_index
from .polyz import sextic_discriminant
from .scan import CSV_COLUMNS, parse_range, scan

# Published residue lists, kept as test vectors for the regenerated tables.
REFERENCE_TABLES = {
    "p2_pairs": [(0, 1), (2, 3)],
    "p3_cond2": [(0, 2), (0, 4), (0, 5), (0, 7), (3, 1), (3, 4), (3, 7), (3, 8), (6, 1), (6, 4), (6, 7), (6, 8)],
    "p3_cond3": [(1, 3), (1, 6), (2, 3), (4, 6), (5, 6), (7, 3), (8, 3), (8, 6)],
    "p3_cond4": [
        (1, 1), (1, 2), (1, 4), (1, 5), (1, 8), (2, 2), (2, 4),
        (2, 5), (2, 7), (2, 8), (4, 1), (4, 2), (4, 5), (4, 7),
        (5, 1), (5, 2), (5, 5), (5, 7), (7, 2), (7, 4), (7, 5),
        (7, 7), (7, 8), (8, 1), (8, 2), (8, 4), (8, 5), (8, 8),
    ],
}  # fmt: skip

GROUP_CHOICES = [g.value for g in GaloisLabel]


def _trinomial(a: int, b: int) -> Trinomial:
    try:
        return Trinomial(a, b)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from None


def _family_text(family_id: str | None) -> str:
    if family_id is None:
        return "-"
    label = fam.descriptor(family_id).label
    return f"{family_id} ({label})" if label and label != family_id else family_id


def _emit_json(obj) -> None:
    click.echo(json.dumps(obj, sort_keys=False))


@click.group()
def main():
    """Classify sextic trinomials x^6 + A x^3 + B."""


@main.command("classify")
@click.option("-a", "a", type=int, required=True, help="coefficient A of x^3")
@click.option("-b", "b", type=int, required=True, help="constant term B")
@click.option("--json", "as_json", is_flag=True, help="emit the full report as JSON")
def cmd_classify(a, b, as_json):
    """Irreducibility, discriminant, Galois group, monogenicity and family."""
    rep = classify(_trinomial(a, b))
    d = rep.as_dict()
    if as_json:
        _emit_json(d)
        return
    rows = [("trinomial", str(rep.trinomial)), ("irreducible", "yes" if rep.irreducible else "no")]
    if not rep.irreducible:
        rows.append(("witness", rep.irreducibility.describe()))
    rows += [
        ("discriminant", f"{rep.discriminant} = {factorize(rep.discriminant)}" if rep.discriminant else "0"),
        ("delta", str(rep.delta)),
        ("gamma", "" if rep.gamma is None else str(rep.gamma)),
    ]
    if rep.irreducible:
        rows += [
            ("galois", f"{rep.galois.value} ({rep.galois.t_notation})"),
            ("monogenic", "yes" if rep.is_monogenic else f"no (index divisible by {rep.monogenic.failing_prime})"),
            ("family", _family_text(rep.family)),
        ]
        for r in rep.monogenic.prime_records:
            effect = "does not divide" if r.outcome else "divides"
            rows.append((f"  p={r.p}", f"condition {r.condition}: p {effect} the index"))
    width = max(len(k) for k, _ in rows)
    for k, v in rows:
        click.echo(f"{k:<{width}}  {v}")


@main.command("scan")
@click.option("--a", "a_range", required=True, help="range LO:HI for A")
@click.option("--b", "b_range", required=True, help="range LO:HI for B")
@click.option("--group", type=click.Choice(GROUP_CHOICES), help="keep only this Galois group")
@click.option("--monogenic-only", is_flag=True)
@click.option("--family", help="keep only rows with this family tag")
@click.option("--json", "as_json", is_flag=True, help="one JSON object with rows and aggregates")
@click.option("--ndjson", is_flag=True, help="one JSON object per row")
@click.option("--jobs", type=int, default=None, help="worker processes (default: all cores)")
def cmd_scan(a_range, b_range, group, monogenic_only, family, as_json, ndjson, jobs):
    """Classify every trinomial in a grid; CSV by default."""
    try:
        ar, br = parse_range(a_range), parse_range(b_range)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from None
    result = scan(ar, br, group=group, monogenic_only=monogenic_only, family=family, jobs=jobs)
    if as_json:
        _emit_json({**result.summary(), "rows": [r.as_dict() for r in result.rows]})
    elif ndjson:
        for r in result.rows:
            _emit_json(r.as_dict())
    else:
        out = csv.writer(sys.stdout, lineterminator="\n")
        out.writerow(CSV_COLUMNS)
        for r in result.rows:
            out.writerow(r.csv_fields())


def _table_diffs(derived: dict, expected: dict) -> list[str]:
    diffs = []
    for name in sorted(set(derived) | set(expected)):
        got = {tuple(x) for x in derived.get(name, [])}
        want = {tuple(x) for x in expected.get(name, [])}
        for pair in sorted(got - want):
            diffs.append(f"{name}: derived {pair} not in reference")
        for pair in sorted(want - got):
            diffs.append(f"{name}: reference {pair} not derived")
    return diffs


@main.command("derive-tables")
@click.option("--json", "as_json", is_flag=True)
@click.option(
    "--expected",
    type=click.Path(exists=True, dir_okay=False),
    help="JSON file of reference tables to diff against instead of the built-in copy",
)
def cmd_derive_tables(as_json, expected):
    """Regenerate the mod-4 and mod-9 condition tables and diff them."""
    derived = derive_condition_tables().as_dict()
    if expected:
        with open(expected, encoding="utf-8") as fh:
            reference = json.load(fh)
    else:
        reference = REFERENCE_TABLES
    diffs = _table_diffs(derived, reference)
    if as_json:
        _emit_json({"tables": derived, "differences": diffs})
    else:
        for name, pairs in derived.items():
            click.echo(f"{name} ({len(pairs)}): " + ", ".join(f"({a},{b})" for a, b in pairs))
        for d in diffs:
            click.echo(f"DIFF {d}")
        click.echo(f"{len(derived)} tables, {len(diffs)} differences")
    if diffs:
        sys.exit(1)


@main.group("families")
def cmd_families():
    """List family descriptors or enumerate verified members."""


@cmd_families.command("list")
@click.option("--include-supplementary", is_flag=True, help="also list the 72 condition-(1) cases")
def families_list(include_supplementary):
    for d in fam.all_descriptors(include_supplementary):
        click.echo(d.to_text())


@cmd_families.command("enumerate")
@click.option("--id", "family_id", required=True)
@click.option("--bound", type=click.IntRange(min=1), required=True)
@click.option("--json", "as_json", is_flag=True)
def families_enumerate(family_id, bound, as_json):
    try:
        members = fam.enumerate_family(family_id, bound)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from None
    if as_json:
        _emit_json({"id": family_id, "bound": bound, "members": [[t.A, t.B] for t in members]})
        return
    for t in members:
        click.echo(f"{t.A},{t.B}")


@cmd_families.command("coverage")
@click.option("--bound", type=click.IntRange(min=1), required=True)
@click.option("--include-supplementary", is_flag=True)
def families_coverage(bound, include_supplementary):
    """Members found per family up to the bound; empty families are flagged."""
    for fid, n in fam.family_coverage(bound, include_supplementary).items():
        click.echo(f"{fid}\t{n}" + ("\tEMPTY" if n == 0 else ""))


@main.command("verify")
@click.option("-a", "a", type=int, required=True)
@click.option("-b", "b", type=int, required=True)
@click.option("--dedekind", is_flag=True, help="compare Dedekind's criterion with the JKS verdicts")
@click.option("--frobenius", is_flag=True, help="compare Frobenius sampling with the Galois label")
@click.option("--primes", type=click.IntRange(min=1), default=500, show_default=True)
def cmd_verify(a, b, dedekind, frobenius, primes):
    """Cross-check a trinomial against the independent oracles."""
    t = _trinomial(a, b)
    rep = classify(t)
    if not rep.irreducible:
        raise click.UsageError(f"{t} is reducible")
    if not dedekind and not frobenius:
        dedekind = frobenius = True
    ok = True
    if dedekind:
        f = t.polynomial()
        for p in factorize(sextic_discriminant(a, b)).primes:
            jks = jks_prime_divides_index(6, 3, a, b, p)
            ded = dedekind_divides_index(f, p)
            agree = jks == ded
            ok &= agree
            verdict = "divides index" if jks else "does not divide index"
            click.echo(
                f"dedekind p={p}: jks {'yes' if jks else 'no'}, dedekind {'yes' if ded else 'no'}"
                f" -> {'agree' if agree else 'DISAGREE'} ({verdict})"
            )
    if frobenius:
        chk = check_fingerprint(t, primes)
        fp = chk.fingerprint
        click.echo(
            f"frobenius primes={fp.sample_size}: split={fp.split_density:.4f} irred={fp.irred_density:.4f}"
            f" nearest={chk.nearest.value} label={chk.label.value}"
            f" -> {'agree' if chk.agrees else 'DISAGREE'}"
        )
        ok &= chk.agrees
    sys.exit(0 if ok else 1)


if __name__ == "__main__":  # pragma: no cover
    main(prog_name=os.path.basename(sys.argv[0]))
