"""Command-line front end.

Exit codes: 0 when every verdict passes, 1 when any verdict fails, 2 for
usage or input errors.
"""

from __future__ import annotations

import json
import sys

import click

from . import dist
from .check import is_exchangeable, is_two_color_exchangeable
from .constructions import construct as build_construction
from .dist import Alphabet, DistributionError
from .search import find_gap_witness, full_support, gap_dimensions, omega_support

MODES = {
    "exchangeable": is_exchangeable,
    "two-color": is_two_color_exchangeable,
}


def _die(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(2)


def _emit(text: str, path: str) -> None:
    if path == "-":
        click.echo(text, nl=False)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _parse_alphabet(ctx, param, value: str) -> Alphabet:
    try:
        return Alphabet(tuple(int(s) for s in value.split(",")))
    except (ValueError, DistributionError) as e:
        raise click.BadParameter(f"{value!r}: {e}") from None


def _positive(ctx, param, value: int) -> int:
    if value < 1:
        raise click.BadParameter("n must be at least 1")
    return value


def _support_spec(alphabet: Alphabet, n: int, kind: str):
    try:
        if kind == "omega":
            return omega_support(alphabet, n)
        return full_support(alphabet, n)
    except ValueError as e:
        _die(str(e))


support_options = [
    click.option("--alphabet", required=True, callback=_parse_alphabet, help="Comma-separated symbols, e.g. -1,0,1."),
    click.option("--n", "n", required=True, type=int, callback=_positive, help="Sequence length."),
    click.option("--support", "kind", type=click.Choice(["full", "omega"]), default="full", show_default=True),
]


def with_support(f):
    for opt in reversed(support_options):
        f = opt(f)
    return f


@click.group()
def main() -> None:
    """Decide exchangeability and two-color exchangeability of finite laws."""


@main.command()
@click.argument("path")
@click.option("--mode", type=click.Choice(["exchangeable", "two-color", "both"]), default="both", show_default=True)
@click.option("--json", "as_json", is_flag=True, help="Emit a JSON object instead of text.")
def verify(path: str, mode: str, as_json: bool) -> None:
    """Check the distribution in PATH ('-' for standard input)."""
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as e:
        _die(f"cannot read {path}: {e.strerror}")
    try:
        d = dist.loads(text)
    except DistributionError as e:
        _die(str(e))

    modes = list(MODES) if mode == "both" else [mode]
    reports = [(m, MODES[m](d)) for m in modes]
    if as_json:
        click.echo(_dump_json({"reports": [{"mode": m, **r.to_dict()} for m, r in reports]}), nl=False)
    else:
        for m, r in reports:
            click.echo(f"mode: {m}")
            click.echo(r.to_text())
    sys.exit(0 if all(r.verdict for _, r in reports) else 1)


@main.command()
@click.argument("name")
@click.option("-o", "--output", default="-", show_default=True, help="Output file, '-' for standard output.")
def construct(name: str, output: str) -> None:
    """Write a named construction: 'pair' or 'general:<n>'."""
    try:
        d = build_construction(name)
    except ValueError as e:
        _die(str(e))
    _emit(dist.dumps(d), output)


def _dims_line(dims: tuple[int, int]) -> str:
    return f"dims: two_color={dims[0]} exchangeable={dims[1]}"


@main.command()
@with_support
@click.option("-o", "--output", default="-", show_default=True, help="Witness file, '-' for standard output.")
@click.option("--json", "as_json", is_flag=True)
def search(alphabet: Alphabet, n: int, kind: str, output: str, as_json: bool) -> None:
    """Look for a two-color exchangeable law that is not exchangeable."""
    spec = _support_spec(alphabet, n, kind)
    dims = gap_dimensions(spec)
    witness = find_gap_witness(spec)
    if as_json:
        obj = {
            "dims": {"two_color": dims[0], "exchangeable": dims[1]},
            "witness": None if witness is None else dist.dumps(witness),
        }
        click.echo(_dump_json(obj), nl=False)
        return
    click.echo(_dims_line(dims))
    if witness is None:
        click.echo("no gap")
    else:
        _emit(dist.dumps(witness), output)


@main.command()
@with_support
@click.option("--json", "as_json", is_flag=True)
def dims(alphabet: Alphabet, n: int, kind: str, as_json: bool) -> None:
    """Print the dimensions of both solution spaces."""
    d = gap_dimensions(_support_spec(alphabet, n, kind))
    if as_json:
        click.echo(_dump_json({"two_color": d[0], "exchangeable": d[1]}), nl=False)
    else:
        click.echo(_dims_line(d))


if __name__ == "__main__":
    main()
