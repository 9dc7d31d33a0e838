"""Python bindings for the xychain simulator.

Configs may be passed as dicts; they are validated by the C++ core.
"""

import json as _json

from ._core import (
    ConfigError,
    DynamicsTrace,
    Error,
    Spectrum,
    ThreeLevelEffective,
    TwoLevelEffective,
    __version__,
    concurrence_pair,
    concurrence_three_level,
    concurrence_two_level,
    diagonalize,
    disordered_channel,
    dominant_frequency,
    generate_sequence,
    participation_ratio,
    run_cli,
    select_mode,
    three_level,
    two_level,
    validate,
    wavefunction_profile,
)
from . import _core


def _text(config):
    return config if isinstance(config, str) else _json.dumps(config)


def sweep_alpha_csv(config):
    return _core.sweep_alpha_csv(_text(config))


def grid_omega_alpha_csv(config):
    return _core.grid_omega_alpha_csv(_text(config))


def normalize_sweep_config(config):
    return _json.loads(_core.normalize_sweep_config(_text(config)))


def evolve(system, times, initial="s"):
    return _core.evolve(_text(system), list(times), initial)
