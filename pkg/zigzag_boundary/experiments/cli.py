import logging
from fractions import Fraction
from pathlib import Path
from typing import Optional, Tuple

import click

from zigzag_boundary.characters.evaluators import paintbox_character
from zigzag_boundary.characters.paintbox import (
    OrientedPaintbox,
    RankedFrequencies,
    read_paintbox,
)
from zigzag_boundary.exceptions import BoundExceededError, PaintboxError, ZigzagError
from zigzag_boundary.experiments.config import InputFileError, ResourceBoundError, RunConfig
from zigzag_boundary.experiments.tables import (
    check_table,
    enumerate_table,
    heights_table,
    kernel_table,
    pmf_table,
    polya_table,
    sample_table,
    sym_table,
    trajectory_table,
    write_table,
)
from zigzag_boundary.zigzag.compositions import Composition

logger = logging.getLogger(__name__)


def _parse_checkpoints(ctx, param, value: Optional[str]) -> Tuple[int, ...]:
    if not value:
        return ()
    try:
        return tuple(sorted({int(token) for token in value.split(",") if token.strip()}))
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {value!r}")


def _parse_composition(ctx, param, value: Optional[str]) -> Optional[Composition]:
    if value is None:
        return None
    try:
        return Composition.parse(value)
    except ZigzagError as error:
        raise click.BadParameter(str(error))


def _parse_rational(ctx, param, value: str) -> Fraction:
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise click.BadParameter(f"expected a rational like 1/3, got {value!r}")


def _parse_rationals(ctx, param, value: Optional[str]) -> Tuple[Fraction, ...]:
    if not value:
        return ()
    return tuple(_parse_rational(ctx, param, token.strip()) for token in value.split(",") if token.strip())


def _load_paintbox(path: Optional[Path]) -> OrientedPaintbox:
    if path is None:
        return OrientedPaintbox.empty()
    try:
        return read_paintbox(path)
    except OSError as error:
        raise InputFileError(f"cannot read {path}: {error.strerror or error}")
    except PaintboxError as error:
        raise InputFileError(str(error))


def _ranked_frequencies(config: RunConfig) -> RankedFrequencies:
    try:
        return RankedFrequencies(config.alpha, config.beta)
    except PaintboxError as error:
        raise click.BadParameter(str(error), param_hint="--alpha")


def _run(config: RunConfig, build) -> None:
    config.validate()
    logger.info("running %s", config)
    try:
        table = build(config)
    except BoundExceededError as error:
        raise ResourceBoundError(str(error))
    write_table(table, config.out, config.fmt)


def output_options(command):
    """``--out`` and ``--format`` shared by every sub-command."""
    command = click.option(
        "-f",
        "--format",
        "fmt",
        help="Output format",
        default="csv",
        type=click.Choice(["csv", "json"]),
    )(command)
    return click.option(
        "-o",
        "--out",
        help="File to write the table to (default: stdout)",
        default=None,
        type=click.Path(dir_okay=False, path_type=Path),
    )(command)


paintbox_option = click.option(
    "-p",
    "--paintbox",
    help="Paintbox file: one 'left right up|down' line per interval, or 'empty'",
    default=None,
    type=click.Path(dir_okay=False, path_type=Path),
)
n_option = click.option("-n", "--n", "n", help="Level / permutation size", default=4, type=int)
seed_option = click.option("-s", "--seed", help="Seed of the random streams", default=0, type=int)
trials_option = click.option(
    "-t", "--trials", help="Number of independent samples", default=10_000, type=int
)
checkpoints_option = click.option(
    "-c",
    "--checkpoints",
    help="Comma-separated sizes at which to report (e.g. 100,1000,10000)",
    default=None,
    callback=_parse_checkpoints,
)


@click.group()
@click.option("-v", "--verbose", count=True, help="Repeat for more logging (-v info, -vv debug)")
def launcher(verbose: int):
    """Zigzag diagrams, oriented paintbox characters and coherent random permutations."""
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbose, logging.DEBUG)
    logging.basicConfig(level=level, format="%(asctime)s %(name)s %(levelname)s %(message)s")


@launcher.command("enumerate")
@n_option
@output_options
def enumerate_cli(n: int, out: Optional[Path], fmt: str) -> None:
    """List level n of the zigzag graph with dimensions, words and conjugates."""
    _run(RunConfig("enumerate", n=n, out=out, fmt=fmt), lambda c: enumerate_table(c.n))


@launcher.command("eval")
@paintbox_option
@n_option
@output_options
def eval_cli(paintbox: Optional[Path], n: int, out: Optional[Path], fmt: str) -> None:
    """Exact probability function of a paintbox over level n."""
    config = RunConfig("eval", paintbox=paintbox, n=n, out=out, fmt=fmt)
    _run(config, lambda c: pmf_table(paintbox_character(_load_paintbox(c.paintbox)), c.n))


@launcher.command("sample")
@paintbox_option
@n_option
@trials_option
@seed_option
@output_options
def sample_cli(
    paintbox: Optional[Path], n: int, trials: int, seed: int, out: Optional[Path], fmt: str
) -> None:
    """Monte Carlo shape frequencies of the paintbox construction against exact values."""
    config = RunConfig(
        "sample", paintbox=paintbox, n=n, trials=trials, seed=seed, out=out, fmt=fmt
    )
    _run(config, lambda c: sample_table(_load_paintbox(c.paintbox), c.n, c.trials, c.seed))


@launcher.command("lln")
@paintbox_option
@checkpoints_option
@seed_option
@output_options
def lln_cli(
    paintbox: Optional[Path], checkpoints: Tuple[int, ...], seed: int, out: Optional[Path], fmt: str
) -> None:
    """Distance between the embedded shape of Pi_n and the paintbox along one arrangement."""
    config = RunConfig(
        "lln", paintbox=paintbox, checkpoints=checkpoints, seed=seed, out=out, fmt=fmt
    )
    _run(config, lambda c: trajectory_table(_load_paintbox(c.paintbox), c.checkpoints, c.seed))


@launcher.command("heights")
@paintbox_option
@n_option
@seed_option
@output_options
def heights_cli(paintbox: Optional[Path], n: int, seed: int, out: Optional[Path], fmt: str) -> None:
    """Empirical heights of 1..n and their limits."""
    config = RunConfig("heights", paintbox=paintbox, n=n, seed=seed, out=out, fmt=fmt)
    _run(config, lambda c: heights_table(_load_paintbox(c.paintbox), c.n, c.seed))


@launcher.command("polya")
@click.option("--theta1", help="Urn weight of the bottom end", default="1", callback=_parse_rational)
@click.option("--theta2", help="Urn weight of the top end", default="1", callback=_parse_rational)
@n_option
@trials_option
@seed_option
@output_options
def polya_cli(
    theta1: Fraction, theta2: Fraction, n: int, trials: int, seed: int, out: Optional[Path], fmt: str
) -> None:
    """Hook shapes of the Polya-urn bi-interval arrangement against the Beta mixture."""
    config = RunConfig(
        "polya", theta1=theta1, theta2=theta2, n=n, trials=trials, seed=seed, out=out, fmt=fmt
    )
    _run(config, lambda c: polya_table(c.theta1, c.theta2, c.n, c.trials, c.seed))


@launcher.command("kernel")
@paintbox_option
@click.option("--mu", help="Composition, e.g. 2,1", default=None, callback=_parse_composition)
@checkpoints_option
@seed_option
@output_options
def kernel_cli(
    paintbox: Optional[Path],
    mu: Optional[Composition],
    checkpoints: Tuple[int, ...],
    seed: int,
    out: Optional[Path],
    fmt: str,
) -> None:
    """Martin kernel K(mu, lambda_n) along a sampled path (empty paintbox by default)."""
    config = RunConfig(
        "kernel", paintbox=paintbox, mu=mu, checkpoints=checkpoints, seed=seed, out=out, fmt=fmt
    )
    _run(config, lambda c: kernel_table(_load_paintbox(c.paintbox), c.mu, c.checkpoints, c.seed))


@launcher.command("check")
@paintbox_option
@click.option("-d", "--depth", help="Levels of the recursion to verify", default=6, type=int)
@output_options
def check_cli(paintbox: Optional[Path], depth: int, out: Optional[Path], fmt: str) -> None:
    """Verify the backward recursion of a paintbox character level by level."""
    config = RunConfig("check", paintbox=paintbox, depth=depth, out=out, fmt=fmt)
    _run(config, lambda c: check_table(_load_paintbox(c.paintbox), c.depth))


@launcher.command("sym")
@click.option("--alpha", help="Up frequencies, e.g. 1/2,1/4", default=None, callback=_parse_rationals)
@click.option("--beta", help="Down frequencies, e.g. 1/8", default=None, callback=_parse_rationals)
@n_option
@output_options
def sym_cli(
    alpha: Tuple[Fraction, ...], beta: Tuple[Fraction, ...], n: int, out: Optional[Path], fmt: str
) -> None:
    """Character values psi(h_k) and psi(p_k) for k = 0..n."""
    config = RunConfig("sym", alpha=alpha, beta=beta, n=n, out=out, fmt=fmt)
    _run(config, lambda c: sym_table(_ranked_frequencies(c), c.n))


if __name__ == "__main__":
    launcher()
