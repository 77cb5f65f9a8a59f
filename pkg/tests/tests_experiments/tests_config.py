from fractions import Fraction
from pathlib import Path

import click
import pytest

from zigzag_boundary.experiments.config import (
    MAX_ENUMERATION_SIZE,
    InputFileError,
    ResourceBoundError,
    RunConfig,
)
from zigzag_boundary.zigzag.compositions import Composition

BOX = Path("box.txt")


def test_valid_configs_pass_through():
    config = RunConfig("sample", paintbox=BOX, n=5, trials=100, seed=3)
    assert config.validate() is config
    assert RunConfig("enumerate", n=MAX_ENUMERATION_SIZE).validate()
    assert RunConfig("kernel", mu=Composition.of(2, 1), checkpoints=(3, 14)).validate()
    assert RunConfig("sym", alpha=(Fraction(1, 2),), beta=(Fraction(1, 2),)).validate()


@pytest.mark.parametrize(
    "config, hint",
    [
        (RunConfig("eval"), "--paintbox"),
        (RunConfig("check", paintbox=BOX, depth=0), "--depth"),
        (RunConfig("sample", paintbox=BOX, trials=0), "--trials"),
        (RunConfig("sample", paintbox=BOX, seed=-1), "--seed"),
        (RunConfig("heights", paintbox=BOX, n=0), "--n"),
        (RunConfig("enumerate", fmt="xml"), "--format"),
        (RunConfig("lln", paintbox=BOX), "--checkpoints"),
        (RunConfig("lln", paintbox=BOX, checkpoints=(1, 10)), "--checkpoints"),
        (RunConfig("kernel", checkpoints=(3,)), "--mu"),
        (RunConfig("kernel", mu=Composition.of(2, 1)), "--checkpoints"),
        (RunConfig("kernel", mu=Composition.of(2, 1), checkpoints=(2,)), "--checkpoints"),
        (RunConfig("polya", theta1=Fraction(0)), "--theta1"),
        (RunConfig("polya", theta2=Fraction(-1)), "--theta2"),
        (RunConfig("sym", alpha=(Fraction(3, 4),), beta=(Fraction(1, 2),)), "--alpha"),
    ],
)
def test_usage_errors_name_the_flag(config, hint):
    with pytest.raises(click.BadParameter) as info:
        config.validate()
    assert info.value.param_hint == hint


@pytest.mark.parametrize(
    "config",
    [
        RunConfig("enumerate", n=MAX_ENUMERATION_SIZE + 1),
        RunConfig("eval", paintbox=BOX, n=MAX_ENUMERATION_SIZE + 1),
        RunConfig("kernel", mu=Composition.of(1), checkpoints=(15,)),
    ],
)
def test_size_limits(config):
    with pytest.raises(ResourceBoundError) as info:
        config.validate()
    assert info.value.exit_code == 4


def test_exit_codes():
    assert InputFileError("x").exit_code == 3
    assert ResourceBoundError("x").exit_code == 4
