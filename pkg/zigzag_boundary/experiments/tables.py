"""
Tabular outputs of the experiments as pandas data frames.

Exact rationals are written as ``p/q`` strings, each next to a ``*_float``
column holding the same value as a float.
"""

import logging
import math
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

import click
import numpy
import pandas

from zigzag_boundary.characters.evaluators import (
    CharacterEvaluator,
    check_recursion,
    paintbox_character,
    shape_pmf,
)
from zigzag_boundary.characters.paintbox import OrientedPaintbox, RankedFrequencies
from zigzag_boundary.characters.sym import h_values, p_values
from zigzag_boundary.sampler.construction import (
    arrangement_from_points,
    draw_points,
    empirical_pmf,
    polya_hook_counts,
    polya_hook_probability,
)
from zigzag_boundary.sampler.experiments import kernel_trajectory, lln_trajectory
from zigzag_boundary.sampler.heights import empirical_heights, limiting_heights
from zigzag_boundary.zigzag.compositions import Composition, compositions
from zigzag_boundary.zigzag.graph import dimension

logger = logging.getLogger(__name__)


def _exact(value: Fraction) -> str:
    return str(Fraction(value))


def _stderr(probability: float, trials: int) -> float:
    return math.sqrt(probability * (1 - probability) / trials)


def enumerate_table(n: int) -> pandas.DataFrame:
    """Level ``n`` of the graph: one row per composition, lexicographic order."""
    rows = [
        {
            "composition": str(lam),
            "word": lam.to_word(),
            "conjugate": str(lam.conjugate()),
            "dimension": dimension(lam),
        }
        for lam in compositions(n)
    ]
    return pandas.DataFrame(rows, columns=["composition", "word", "conjugate", "dimension"])


def pmf_table(character: CharacterEvaluator, n: int) -> pandas.DataFrame:
    """``p(lambda)`` and ``d(lambda) p(lambda)`` over level ``n``."""
    rows = []
    for lam, mass in shape_pmf(character, n).items():
        p = character(lam)
        rows.append(
            {
                "composition": str(lam),
                "dimension": dimension(lam),
                "p": _exact(p),
                "p_float": float(p),
                "d_p": _exact(mass),
                "d_p_float": float(mass),
            }
        )
    return pandas.DataFrame(rows)


def sample_table(paintbox: OrientedPaintbox, n: int, trials: int, seed: int) -> pandas.DataFrame:
    """Empirical against exact shape frequencies, with binomial standard errors."""
    frequencies = empirical_pmf(paintbox, n, trials, seed)
    exact = shape_pmf(paintbox, n)
    rows = []
    for lam, mass in exact.items():
        rows.append(
            {
                "shape": str(lam),
                "dim": dimension(lam),
                "empirical": frequencies.get(lam, 0.0),
                "exact": _exact(mass),
                "exact_float": float(mass),
                "stderr": _stderr(float(mass), trials),
            }
        )
    return pandas.DataFrame(rows)


def trajectory_table(paintbox: OrientedPaintbox, checkpoints: Sequence[int], seed: int) -> pandas.DataFrame:
    rows = [
        {"n": n, "distance": _exact(d), "distance_float": float(d)}
        for n, d in lln_trajectory(paintbox, checkpoints, seed)
    ]
    return pandas.DataFrame(rows, columns=["n", "distance", "distance_float"])


def heights_table(paintbox: OrientedPaintbox, n: int, seed: int) -> pandas.DataFrame:
    """Empirical heights next to their limits, computed from one stream."""
    xi = draw_points(paintbox, n, seed)
    arrangement = arrangement_from_points(paintbox, xi)
    return pandas.DataFrame(
        {
            "j": numpy.arange(1, n + 1),
            "xi": xi,
            "phi_hat": empirical_heights(arrangement),
            "phi_limit": limiting_heights(paintbox, xi),
        }
    )


def polya_table(
    theta1: Fraction, theta2: Fraction, n: int, trials: int, seed: int
) -> pandas.DataFrame:
    """Hook-shape frequencies of the urn against the Beta-mixture formula."""
    counts = polya_hook_counts(theta1, theta2, n, trials, seed)
    rows = []
    for legs in range(n):
        shape = Composition((1,) * legs + (n - legs,))
        arm = n - 1 - legs
        mass = math.comb(legs + arm, legs) * polya_hook_probability(theta1, theta2, legs, arm)
        rows.append(
            {
                "shape": str(shape),
                "legs": legs,
                "empirical": counts.get(shape, 0) / trials,
                "exact": _exact(mass),
                "exact_float": float(mass),
                "stderr": _stderr(float(mass), trials),
            }
        )
    return pandas.DataFrame(rows)


def kernel_table(
    paintbox: OrientedPaintbox, mu: Composition, checkpoints: Sequence[int], seed: int
) -> pandas.DataFrame:
    rows = [
        {
            "n": n,
            "lambda": str(shape),
            "kernel": _exact(kernel),
            "kernel_float": float(kernel),
            "p_mu": _exact(target),
            "p_mu_float": float(target),
        }
        for n, shape, kernel, target in kernel_trajectory(paintbox, mu, checkpoints, seed)
    ]
    return pandas.DataFrame(rows)


def check_table(paintbox: OrientedPaintbox, depth: int) -> pandas.DataFrame:
    """One summary row of the recursion check, then one row per failure."""
    report = check_recursion(paintbox_character(paintbox), depth)
    rows = [
        {
            "mu": "",
            "depth": report.depth,
            "checked": report.checked,
            "passed": report.passed,
            "p_mu": "",
            "successor_sum": "",
        }
    ]
    for mu, expected, total in report.failures:
        rows.append(
            {
                "mu": str(mu),
                "depth": report.depth,
                "checked": report.checked,
                "passed": False,
                "p_mu": _exact(expected),
                "successor_sum": _exact(total),
            }
        )
    return pandas.DataFrame(rows)


def sym_table(frequencies: RankedFrequencies, order: int) -> pandas.DataFrame:
    """``(n, psi(h_n), psi(p_n))`` for ``n = 0..order``."""
    h = h_values(frequencies, order)
    p = p_values(frequencies, order)
    rows = [
        {"n": n, "h": _exact(h[n]), "h_float": float(h[n]), "p": _exact(p[n]), "p_float": float(p[n])}
        for n in range(order + 1)
    ]
    return pandas.DataFrame(rows)


def write_table(table: pandas.DataFrame, out: Optional[Path] = None, fmt: str = "csv") -> None:
    """Write ``table`` as CSV or as a JSON list of records, to ``out`` or stdout."""
    if fmt == "json":
        text = table.to_json(orient="records", double_precision=15) + "\n"
    else:
        text = table.to_csv(index=False, float_format="%.15g")
    if out is None:
        click.echo(text, nl=False)
        return
    Path(out).write_text(text, encoding="utf-8")
    logger.info("wrote %d rows to %s", len(table), out)
