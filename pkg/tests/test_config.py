import json
import math

import numpy as np
import pytest

from dephasing.config import (
    BathConfig,
    Fig1Config,
    SimConfig,
    load_config,
    load_default_config,
)
from dephasing.errors import ConfigError

SIM_DICT = {
    'qubit1': {'a': 1.0, 'bath': {'beta': 'inf', 'modes': [
        {'omega': 1.0, 'g_re': 0.3, 'g_im': 0.0},
        {'omega': 2.5, 'g_re': 0.1, 'g_im': -0.2},
    ]}},
    'qubit2': {'a': 0.5, 'bath': {'beta': 2.0, 'ohmic': {
        'amplitude': 0.1, 's': 1.0, 'omega_c': 3.0, 'n_modes': 20, 'omega_max': 10.0,
    }}},
    'alpha': {'re': 0.6, 'im': -0.8},
    'time': {'t_max': 4.0, 'n_steps': 5},
}

FIG1_DICT = {
    'xi_values': [0.0, 0.5, 1.0],
    'eta': {'min': 0.0, 'max': 1.5, 'n_points': 4},
    'suppress_prefactor': False,
    'alpha': {'re': 2.0, 'im': 0.0},
}


def write_json(path, d):
    path.write_text(json.dumps(d))
    return str(path)


def test_sim_config_round_trip():
    config = SimConfig.from_dict(SIM_DICT)
    assert config.to_dict() == SIM_DICT
    assert SimConfig.from_dict(config.to_dict()) == config


def test_fig1_config_round_trip():
    config = Fig1Config.from_dict(FIG1_DICT)
    assert config.to_dict() == FIG1_DICT
    assert Fig1Config.from_dict(config.to_dict()) == config


def test_sim_config_values():
    config = SimConfig.from_dict(SIM_DICT)
    assert config.alpha == 0.6 - 0.8j
    assert np.array_equal(config.times(), [0., 1., 2., 3., 4.])
    params1 = config.qubit1.to_params()
    assert math.isinf(params1.bath.beta)
    assert params1.bath.modes[1].g == 0.1 - 0.2j
    params2 = config.qubit2.to_params()
    assert len(params2.bath.modes) == 20
    assert params2.bath.beta == 2.


def test_fig1_config_defaults():
    d = {'xi_values': [0.5], 'eta': {'min': 0., 'max': 1., 'n_points': 3}}
    config = Fig1Config.from_dict(d)
    assert config.suppress_prefactor
    assert config.alpha == 1
    assert np.array_equal(config.etas(), [0., 0.5, 1.])


@pytest.mark.parametrize('kind', ['simulate', 'fig1'])
def test_default_config(kind):
    assert load_config('default', kind) == load_default_config(kind)


def test_default_fig1_values():
    config = load_default_config('fig1')
    assert config.xi_values == (0., 0.25, 0.5, 0.75, 1.)
    assert config.n_points == 181
    assert config.suppress_prefactor


def test_load_config_file(tmp_path):
    path = write_json(tmp_path / 'sim.json', SIM_DICT)
    assert load_config(path, 'simulate') == SimConfig.from_dict(SIM_DICT)


def set_field(d, dotted, value):
    d = json.loads(json.dumps(d))
    node = d
    keys = dotted.split('.')
    for key in keys[:-1]:
        node = node[key]
    if value is None:
        del node[keys[-1]]
    else:
        node[keys[-1]] = value
    return d


@pytest.mark.parametrize('dotted, value, field', [
    ('qubit1.bath.beta', -1., 'qubit1.bath.beta'),
    ('qubit1.bath.beta', 'hot', 'qubit1.bath.beta'),
    ('qubit2.bath.ohmic.n_modes', 2.5, 'qubit2.bath.ohmic.n_modes'),
    ('qubit2.bath.ohmic.s', 0., 'qubit2.bath.ohmic.s'),
    ('time.n_steps', 1, 'time.n_steps'),
    ('time.t_max', 0., 'time.t_max'),
    ('alpha.re', 'x', 'alpha.re'),
    ('qubit1.a', None, 'qubit1.a'),
    ('qubit1.bath.modes', [], 'qubit1.bath.modes'),
])
def test_sim_config_field_errors(tmp_path, dotted, value, field):
    path = write_json(tmp_path / 'sim.json', set_field(SIM_DICT, dotted, value))
    with pytest.raises(ConfigError) as e:
        load_config(path, 'simulate')
    assert e.value.field == field
    assert e.value.path == path
    assert field in str(e.value)


def test_bath_needs_exactly_one_source():
    d = dict(SIM_DICT['qubit2']['bath'], modes=[{'omega': 1., 'g_re': 1.}])
    with pytest.raises(ConfigError, match='exactly one'):
        BathConfig.from_dict(d, 'qubit2.bath')


@pytest.mark.parametrize('dotted, value', [
    ('xi_values', [0.5, 1.5]),
    ('eta.n_points', 1),
    ('suppress_prefactor', 'yes'),
])
def test_fig1_config_field_errors(dotted, value):
    with pytest.raises(ConfigError):
        Fig1Config.from_dict(set_field(FIG1_DICT, dotted, value))


def test_syntax_error_location(tmp_path):
    path = tmp_path / 'bad.json'
    path.write_text('{\n  "xi_values": [0.5,\n}\n')
    with pytest.raises(ConfigError) as e:
        load_config(str(path), 'fig1')
    assert e.value.line == 3
    assert str(e.value).startswith(f'{path}:3:')


def test_missing_file(tmp_path):
    with pytest.raises(ConfigError):
        load_config(str(tmp_path / 'missing.json'), 'simulate')


def test_huge_integer_is_a_field_error(tmp_path):
    path = tmp_path / 'fig1.json'
    path.write_text('{"xi_values": [0.5], "eta": {"min": 0, "max": 1, "n_points": 1' + '0' * 400 + '}}')
    with pytest.raises(ConfigError) as e:
        load_config(str(path), 'fig1')
    assert e.value.field == 'eta.n_points'
