"""Command-line front end.

Subcommands: count, enumerate, table, map, verify, egf.  All numeric output is
exact (decimal integers or p/q rationals); output is byte-deterministic for
fixed arguments.  Exit codes: 0 success, 1 verification or domain failure,
2 usage error (including malformed input and exceeded enumeration bounds).
"""
from __future__ import annotations

import json
import sys

import click

from . import __version__
from .derangements import (
    DerangementReduction,
    ReductionKind,
    attach_largest,
    detach_largest,
    expand_derangement,
    reduce_derangement,
)
from .egf import EGF_BUILDERS
from .errors import BoundExceeded, NotABijection, PapkitError
from .padmaps import (
    PadReduction,
    pad_expand,
    pad_extraction_involution,
    pad_reduce,
    pad_step_down,
    pad_step_up,
    pap_grow,
    pap_grow_parity,
    pap_shrink,
    pap_shrink_parity,
    parity_swap,
)
from .perm import Permutation, parse_cycles, parse_word
from .sequences import (
    Family,
    enumerate_family,
    excedance_triangle,
    family_count,
    family_count_by_enumeration,
    pad_excedance_by_convolution,
    pad_excedance_parity_by_convolution,
    sequence_bfile_lines,
    signed_diff_triangle,
)
from .split import SplitPair, join_pap, split_pap
from .verify import SCOPES, run_scope


# ---------------------------------------------------------------------------
# text plumbing
# ---------------------------------------------------------------------------

def _parse_perm(text: str) -> tuple[Permutation, str]:
    """Parse either text form; returns the permutation and the detected style."""
    text = text.strip()
    if text.startswith("("):
        return parse_cycles(text), "cycles"
    return parse_word(text), "word"


def _fmt(p: Permutation, style: str) -> str:
    return p.cycle_text() if style == "cycles" else p.one_line()


def _strip_outer(text: str) -> str:
    """Strip one pair of outer parentheses if they enclose the whole string."""
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        return text
    depth = 0
    for pos, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth == 0 and pos != len(text) - 1:
                return text
    return text[1:-1]


def _split_top(text: str, sep: str) -> list[str]:
    """Split at top-level (depth zero) occurrences of sep."""
    parts = []
    depth = 0
    current = []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    parts.append("".join(current))
    return [p.strip() for p in parts]


def _parse_indexed(text: str) -> tuple[list[int], str]:
    """Parse "(i | perm)" or "(i, j | perm)"; returns (indices, perm text)."""
    inner = _strip_outer(text)
    pieces = _split_top(inner, "|")
    if len(pieces) != 2:
        raise NotABijection(f"expected '(i | permutation)', got {text!r}")
    indices = [int(t) for t in _split_top(pieces[0], ",") if t]
    return indices, pieces[1]


# ---------------------------------------------------------------------------
# the map registry
# ---------------------------------------------------------------------------

def _map_phi(text: str, direction: str, size: int | None) -> str:
    if direction == "fwd":
        p, style = _parse_perm(text)
        pair = split_pap(p)
        return f"({_fmt(pair.odd_part, style)} | {_fmt(pair.even_part, style)})"
    inner = _strip_outer(text)
    left, right = _split_top(inner, "|")
    odd, style = _parse_perm(left)
    even, _ = _parse_perm(right)
    return _fmt(join_pap(SplitPair(odd, even, odd.n + even.n)), style)


def _map_psi(text: str, direction: str, size: int | None) -> str:
    if direction == "fwd":
        d, style = _parse_perm(text)
        image = reduce_derangement(d)
        return f"({image.index}, {image.kind.value}, {_fmt(image.reduced, style)})"
    pieces = _split_top(_strip_outer(text), ",")
    if len(pieces) != 3:
        raise NotABijection(f"expected '(i, long|trans, permutation)', got {text!r}")
    kind = {"long": ReductionKind.LONG_CYCLE, "trans": ReductionKind.TRANSPOSITION}.get(pieces[1])
    if kind is None:
        raise NotABijection(f"unknown reduction kind {pieces[1]!r}")
    reduced, style = _parse_perm(pieces[2])
    image = DerangementReduction(int(pieces[0]), kind, reduced)
    return _fmt(expand_derangement(image, size), style)


def _map_tau(text: str, direction: str, size: int | None) -> str:
    if direction == "fwd":
        indices, perm_text = _parse_indexed(text)
        (i,) = indices
        d, style = _parse_perm(perm_text)
        return _fmt(attach_largest(i, d), style)
    d, style = _parse_perm(text)
    i, smaller = detach_largest(d)
    return f"({i} | {_fmt(smaller, style)})"


def _map_zeta(text: str, direction: str, size: int | None) -> str:
    return _map_tau(text, "inv" if direction == "fwd" else "fwd", size)


def _map_omega(text: str, direction: str, size: int | None) -> str:
    if direction == "fwd":
        p, style = _parse_perm(text)
        i, smaller = pap_shrink(p)
        return f"({i} | {_fmt(smaller, style)})"
    indices, perm_text = _parse_indexed(text)
    (i,) = indices
    p, style = _parse_perm(perm_text)
    return _fmt(pap_grow(i, p, size), style)


def _make_omega_parity(required_sign: int):
    def runner(text: str, direction: str, size: int | None) -> str:
        if direction == "fwd":
            p, style = _parse_perm(text)
            if p.sign() != required_sign:
                raise PapkitError(
                    f"{p} has the wrong sign for this branch "
                    f"(need {'even' if required_sign == 1 else 'odd'})"
                )
            image = pap_shrink_parity(p)
            if isinstance(image, Permutation):
                return _fmt(image, style)
            i, smaller = image
            return f"({i} | {_fmt(smaller, style)})"
        if "|" in text:
            indices, perm_text = _parse_indexed(text)
            (i,) = indices
            p, style = _parse_perm(perm_text)
            return _fmt(pap_grow_parity((i, p), size), style)
        p, style = _parse_perm(text)
        return _fmt(pap_grow_parity(p, size), style)

    return runner


def _map_swap(text: str, direction: str, size: int | None) -> str:
    p, style = _parse_perm(text)
    return _fmt(parity_swap(p), style)


def _map_pad_reduce(text: str, direction: str, size: int | None) -> str:
    if direction == "fwd":
        d, style = _parse_perm(text)
        image = pad_reduce(d)
        if image.inner_index is None:
            return f"({image.index} | {_fmt(image.tail, style)})"
        return f"({image.index}, {image.inner_index} | {_fmt(image.tail, style)})"
    indices, perm_text = _parse_indexed(text)
    tail, style = _parse_perm(perm_text)
    if len(indices) == 1:
        image = PadReduction(indices[0], None, tail)
        n = size if size is not None else tail.n + 1
    elif len(indices) == 2:
        if size is None:
            raise click.UsageError(
                "the two-index image leaves the target size ambiguous; pass --size"
            )
        image = PadReduction(indices[0], indices[1], tail)
        n = size
    else:
        raise NotABijection(f"expected one or two indices, got {text!r}")
    return _fmt(pad_expand(image, n), style)


def _map_pad_step(text: str, direction: str, size: int | None) -> str:
    if direction == "fwd":
        d, style = _parse_perm(text)
        i, smaller = pad_step_down(d)
        return f"({i} | {_fmt(smaller, style)})"
    indices, perm_text = _parse_indexed(text)
    (i,) = indices
    pad, style = _parse_perm(perm_text)
    return _fmt(pad_step_up(i, pad, size), style)


def _map_extraction(text: str, direction: str, size: int | None) -> str:
    from .derangements import extraction_involution

    p, style = _parse_perm(text)
    return _fmt(extraction_involution(p), style)


def _map_pad_extraction(text: str, direction: str, size: int | None) -> str:
    p, style = _parse_perm(text)
    return _fmt(pad_extraction_involution(p), style)


MAPS = {
    "phi": _map_phi,
    "psi": _map_psi,
    "tau": _map_tau,
    "zeta": _map_zeta,
    "omega": _map_omega,
    "omega-e": _make_omega_parity(1),
    "omega-o": _make_omega_parity(-1),
    "swap": _map_swap,
    "Psi": _map_pad_reduce,
    "Z": _map_pad_step,
    "f": _map_extraction,
    "F": _map_pad_extraction,
}


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def _family(tag: str) -> Family:
    try:
        return Family.parse(tag)
    except PapkitError as exc:
        raise click.UsageError(str(exc)) from exc


@click.group()
@click.version_option(__version__, prog_name="papkit")
def main() -> None:
    """Exact counting, enumeration and verification for parity alternating
    permutations (PAPs) and derangements (PADs)."""


@main.command()
@click.argument("family")
@click.option("--n", "n", type=int, default=None, help="Single size to count.")
@click.option("--max-n", "max_n", type=int, default=None,
              help="Emit the whole sequence for 0..MAX_N.")
@click.option("--oracle", is_flag=True, help="Cross-check against brute-force enumeration.")
@click.option("--format", "fmt", type=click.Choice(["text", "json", "bfile"]), default="text")
@click.option("--threads", type=int, default=1, help="Shard count for the oracle enumeration.")
def count(family: str, n: int | None, max_n: int | None, oracle: bool, fmt: str,
          threads: int) -> None:
    """Print the exact count of FAMILY at one size or as a sequence."""
    fam = _family(family)
    if (n is None) == (max_n is None):
        raise click.UsageError("pass exactly one of --n or --max-n")
    sizes = [n] if n is not None else list(range(max_n + 1))
    values = [family_count(fam, size) for size in sizes]
    if oracle:
        for size, value in zip(sizes, values):
            try:
                brute = family_count_by_enumeration(fam, size, threads=threads)
            except BoundExceeded as exc:
                raise click.UsageError(str(exc)) from exc
            if brute != value:
                click.echo(
                    f"oracle mismatch for {fam.value} at n={size}: "
                    f"closed form {value}, enumeration {brute}",
                    err=True,
                )
                sys.exit(1)
    if n is not None:
        click.echo(str(values[0]))
    elif fmt == "bfile":
        click.echo("\n".join(sequence_bfile_lines(values)))
    elif fmt == "json":
        click.echo(json.dumps(values))
    else:
        click.echo("\n".join(str(v) for v in values))


@main.command(name="enumerate")
@click.argument("family")
@click.option("--n", "n", type=int, required=True)
@click.option("--threads", type=int, default=1)
def enumerate_cmd(family: str, n: int, threads: int) -> None:
    """Stream FAMILY at size N as JSON lines, in lexicographic order."""
    fam = _family(family)
    try:
        for p in enumerate_family(fam, n, threads=threads):
            record = {
                "n": p.n,
                "word": list(p.word),
                "cycles": p.cycle_text(),
                "parity": str(p.parity()),
                "excedances": p.excedance_count(),
            }
            click.echo(json.dumps(record))
    except BoundExceeded as exc:
        raise click.UsageError(str(exc)) from exc


_TABLE_FAMILIES = ("pad", "pad-even", "pad-odd", "derangement", "der-even", "der-odd", "diff")


@main.command()
@click.argument("family", type=click.Choice(_TABLE_FAMILIES))
@click.option("--max-n", "max_n", type=int, required=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv")
@click.option("--check-convolution", is_flag=True,
              help="Assert the convolution formulas against the table (PAD families).")
def table(family: str, max_n: int, fmt: str, check_convolution: bool) -> None:
    """Emit the excedance triangle of FAMILY up to MAX_N (header n,k,value)."""
    try:
        if family == "diff":
            triangle = signed_diff_triangle(max_n)
        else:
            triangle = excedance_triangle(Family.parse(family), max_n)
    except BoundExceeded as exc:
        raise click.UsageError(str(exc)) from exc
    except (AssertionError, PapkitError) as exc:
        click.echo(f"table check failed: {exc}", err=True)
        sys.exit(1)
    if check_convolution and family in ("pad", "pad-even", "pad-odd"):
        for n in range(4, max_n + 1):
            for k in range(2, n - 1):
                if family == "pad":
                    expected = pad_excedance_by_convolution(n, k)
                else:
                    even, odd = pad_excedance_parity_by_convolution(n, k)
                    expected = even if family == "pad-even" else odd
                if triangle.value(n, k) != expected:
                    click.echo(
                        f"convolution mismatch at (n,k)=({n},{k}): "
                        f"table {triangle.value(n, k)}, formula {expected}",
                        err=True,
                    )
                    sys.exit(1)
    if fmt == "json":
        payload = [
            {"n": n, "k": k, "value": v} for (n, k), v in sorted(triangle.entries.items())
        ]
        click.echo(json.dumps(payload))
    else:
        click.echo("\n".join(triangle.csv_lines()))


@main.command(name="map")
@click.argument("name", type=click.Choice(sorted(MAPS), case_sensitive=True))
@click.option("--input", "text", required=True,
              help="Permutation or image tuple in the documented text forms.")
@click.option("--direction", type=click.Choice(["fwd", "inv"]), default="fwd")
@click.option("--size", type=int, default=None,
              help="Target size for inverses whose image leaves it ambiguous.")
def map_cmd(name: str, text: str, direction: str, size: int | None) -> None:
    """Apply a named bijection (or its inverse) to the given input."""
    runner = MAPS[name]
    try:
        result = runner(text, direction, size)
    except click.UsageError:
        raise
    except (NotABijection, ValueError) as exc:
        if isinstance(exc, PapkitError) and not isinstance(exc, NotABijection):
            click.echo(f"domain error: {exc}", err=True)
            sys.exit(1)
        raise click.UsageError(f"malformed input: {exc}") from exc
    click.echo(result)


@main.command()
@click.argument("scope", type=click.Choice(SCOPES))
@click.option("--max-n", "max_n", type=int, default=10)
@click.option("--order", type=int, default=20)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def verify(scope: str, max_n: int, order: int, fmt: str) -> None:
    """Run a verification suite and print its report; exit 1 on any failure."""
    report = run_scope(scope, max_n=max_n, order=order)
    click.echo(report.to_json() if fmt == "json" else report.to_text())
    if not report.overall:
        sys.exit(1)


@main.command()
@click.argument("name", type=click.Choice(sorted(EGF_BUILDERS)))
@click.option("--order", type=int, default=24)
def egf(name: str, order: int) -> None:
    """Dump an EGF, one line per coefficient: "n numerator/denominator n!*c_n"."""
    series = EGF_BUILDERS[name](order)
    click.echo("\n".join(series.dump_lines()))


if __name__ == "__main__":
    main()
