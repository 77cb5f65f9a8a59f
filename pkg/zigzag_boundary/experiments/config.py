"""Validated run configuration of the command-line experiments."""

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional, Tuple

import click

from zigzag_boundary.sampler.experiments import MAX_KERNEL_SIZE
from zigzag_boundary.zigzag.compositions import Composition

MAX_ENUMERATION_SIZE = 16

PAINTBOX_COMMANDS = ("eval", "sample", "lln", "heights", "check")
FORMATS = ("csv", "json")


class InputFileError(click.ClickException):
    """Unreadable or malformed input file."""

    exit_code = 3


class ResourceBoundError(click.ClickException):
    """A size limit of an exact computation was exceeded."""

    exit_code = 4


@dataclass(frozen=True)
class RunConfig:
    command: str
    paintbox: Optional[Path] = None
    n: int = 4
    depth: int = 6
    trials: int = 10_000
    seed: int = 0
    checkpoints: Tuple[int, ...] = ()
    out: Optional[Path] = None
    fmt: str = "csv"
    mu: Optional[Composition] = None
    theta1: Fraction = Fraction(1)
    theta2: Fraction = Fraction(1)
    alpha: Tuple[Fraction, ...] = ()
    beta: Tuple[Fraction, ...] = ()

    def validate(self) -> "RunConfig":
        """
        Reject inconsistent flags before any work is done.

        Usage problems raise ``click.BadParameter`` naming the flag; size
        limits raise :class:`ResourceBoundError`.
        """
        if self.fmt not in FORMATS:
            raise click.BadParameter(f"must be one of {', '.join(FORMATS)}", param_hint="--format")
        if self.command in PAINTBOX_COMMANDS and self.paintbox is None:
            raise click.BadParameter(f"is required by '{self.command}'", param_hint="--paintbox")
        if self.n < 1:
            raise click.BadParameter(f"must be at least 1, got {self.n}", param_hint="--n")
        if self.trials < 1:
            raise click.BadParameter(f"must be at least 1, got {self.trials}", param_hint="--trials")
        if self.seed < 0:
            raise click.BadParameter(f"must be nonnegative, got {self.seed}", param_hint="--seed")
        if self.depth < 1:
            raise click.BadParameter(f"must be at least 1, got {self.depth}", param_hint="--depth")
        if self.theta1 <= 0:
            raise click.BadParameter(f"must be positive, got {self.theta1}", param_hint="--theta1")
        if self.theta2 <= 0:
            raise click.BadParameter(f"must be positive, got {self.theta2}", param_hint="--theta2")
        if self.command == "lln":
            if not self.checkpoints:
                raise click.BadParameter("needs at least one value", param_hint="--checkpoints")
            if min(self.checkpoints) < 2:
                raise click.BadParameter("values must be at least 2", param_hint="--checkpoints")
        if self.command == "kernel":
            if self.mu is None:
                raise click.BadParameter("is required by 'kernel'", param_hint="--mu")
            if not self.checkpoints:
                raise click.BadParameter("needs at least one value", param_hint="--checkpoints")
            if min(self.checkpoints) < max(self.mu.size, 1):
                raise click.BadParameter(
                    f"values must be at least |mu| = {self.mu.size}", param_hint="--checkpoints"
                )
            if max(self.checkpoints) > MAX_KERNEL_SIZE:
                raise ResourceBoundError(
                    f"kernel tables are limited to |lambda| <= {MAX_KERNEL_SIZE}"
                )
        if self.command in ("enumerate", "eval") and self.n > MAX_ENUMERATION_SIZE:
            raise ResourceBoundError(f"level tables are limited to n <= {MAX_ENUMERATION_SIZE}")
        if self.command == "sym" and sum(self.alpha) + sum(self.beta) > 1:
            raise click.BadParameter("alpha and beta must sum to at most 1", param_hint="--alpha")
        return self
