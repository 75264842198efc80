""" JSON run configurations for the simulate and fig1 commands

A file holds one configuration object. The package ships defaults for both
commands in default_parameters.json (keys 'simulate' and 'fig1'); the word
'default' in place of a path selects them. Inverse temperature is a positive
number or the string "inf".
"""
from dataclasses import dataclass
import json
import math
import os

import numpy as np

from dephasing.bath import Bath, BathMode, OhmicSpec, discretize_ohmic
from dephasing.errors import ConfigError, DephasingError
from dephasing.evolution import QubitParams

DEFAULT_PARAMETERS = 'default_parameters.json'


def _require(d, key, field):
    if not isinstance(d, dict):
        raise ConfigError('expected a JSON object', field=field or None)
    if key not in d:
        raise ConfigError('missing required field', field=f'{field}.{key}' if field else key)
    return d[key]


def _number(value, field, positive=False, integer=False):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f'expected a number, got {value!r}', field=field)
    try:
        finite = math.isfinite(value)
    except OverflowError:
        finite = False
    if not finite:
        raise ConfigError(f'must be finite, got {value!r}', field=field)
    if integer and int(value) != value:
        raise ConfigError(f'expected an integer, got {value!r}', field=field)
    if positive and value <= 0:
        raise ConfigError(f'must be positive, got {value!r}', field=field)
    return int(value) if integer else float(value)


def _beta(value, field):
    if value == 'inf':
        return math.inf
    if isinstance(value, str):
        raise ConfigError(f'expected a positive number or "inf", got {value!r}', field=field)
    return _number(value, field, positive=True)


def _complex(d, field):
    return complex(_number(_require(d, 're', field), f'{field}.re'),
                   _number(d.get('im', 0.), f'{field}.im'))


def _complex_dict(z):
    return {'re': z.real, 'im': z.imag}


@dataclass(frozen=True)
class OhmicConfig:
    amplitude: float
    s: float
    omega_c: float
    n_modes: int
    omega_max: float

    @classmethod
    def from_dict(cls, d, field):
        return cls(
            amplitude=_number(_require(d, 'amplitude', field), f'{field}.amplitude', positive=True),
            s=_number(_require(d, 's', field), f'{field}.s', positive=True),
            omega_c=_number(_require(d, 'omega_c', field), f'{field}.omega_c', positive=True),
            n_modes=_number(_require(d, 'n_modes', field), f'{field}.n_modes', positive=True, integer=True),
            omega_max=_number(_require(d, 'omega_max', field), f'{field}.omega_max', positive=True),
        )

    def to_dict(self):
        return {'amplitude': self.amplitude, 's': self.s, 'omega_c': self.omega_c,
                'n_modes': self.n_modes, 'omega_max': self.omega_max}

    def modes(self):
        return discretize_ohmic(OhmicSpec(self.amplitude, self.s, self.omega_c),
                                self.n_modes, self.omega_max)


@dataclass(frozen=True)
class BathConfig:
    """ Bath given either by explicit (omega, g) modes or by an ohmic block """
    beta: float
    modes: tuple = None
    ohmic: OhmicConfig = None

    @classmethod
    def from_dict(cls, d, field):
        beta = _beta(_require(d, 'beta', field), f'{field}.beta')
        has_modes, has_ohmic = 'modes' in d, 'ohmic' in d
        if has_modes == has_ohmic:
            raise ConfigError('exactly one of "modes" or "ohmic" is required', field=field)
        if has_ohmic:
            return cls(beta=beta, ohmic=OhmicConfig.from_dict(d['ohmic'], f'{field}.ohmic'))
        if not isinstance(d['modes'], list) or len(d['modes']) == 0:
            raise ConfigError('expected a non-empty list of modes', field=f'{field}.modes')
        modes = []
        for i, mode in enumerate(d['modes']):
            mfield = f'{field}.modes[{i}]'
            modes.append((
                _number(_require(mode, 'omega', mfield), f'{mfield}.omega', positive=True),
                _number(_require(mode, 'g_re', mfield), f'{mfield}.g_re'),
                _number(mode.get('g_im', 0.), f'{mfield}.g_im'),
            ))
        return cls(beta=beta, modes=tuple(modes))

    def to_dict(self):
        d = {'beta': 'inf' if math.isinf(self.beta) else self.beta}
        if self.ohmic is not None:
            d['ohmic'] = self.ohmic.to_dict()
        else:
            d['modes'] = [{'omega': w, 'g_re': g_re, 'g_im': g_im} for w, g_re, g_im in self.modes]
        return d

    def to_bath(self):
        if self.ohmic is not None:
            modes = self.ohmic.modes()
        else:
            modes = tuple(BathMode(w, complex(g_re, g_im)) for w, g_re, g_im in self.modes)
        return Bath(modes, self.beta)


@dataclass(frozen=True)
class QubitConfig:
    a: float
    bath: BathConfig

    @classmethod
    def from_dict(cls, d, field):
        return cls(a=_number(_require(d, 'a', field), f'{field}.a'),
                   bath=BathConfig.from_dict(_require(d, 'bath', field), f'{field}.bath'))

    def to_dict(self):
        return {'a': self.a, 'bath': self.bath.to_dict()}

    def to_params(self):
        return QubitParams(self.a, self.bath.to_bath())


@dataclass(frozen=True)
class SimConfig:
    """ Time series of the alpha family under two independent baths """
    qubit1: QubitConfig
    qubit2: QubitConfig
    alpha: complex
    t_max: float
    n_steps: int

    @classmethod
    def from_dict(cls, d):
        time = _require(d, 'time', '')
        n_steps = _number(_require(time, 'n_steps', 'time'), 'time.n_steps', integer=True)
        if n_steps < 2:
            raise ConfigError(f'must be >= 2, got {n_steps}', field='time.n_steps')
        return cls(
            qubit1=QubitConfig.from_dict(_require(d, 'qubit1', ''), 'qubit1'),
            qubit2=QubitConfig.from_dict(_require(d, 'qubit2', ''), 'qubit2'),
            alpha=_complex(_require(d, 'alpha', ''), 'alpha'),
            t_max=_number(_require(time, 't_max', 'time'), 'time.t_max', positive=True),
            n_steps=n_steps,
        )

    def to_dict(self):
        return {
            'qubit1': self.qubit1.to_dict(),
            'qubit2': self.qubit2.to_dict(),
            'alpha': _complex_dict(self.alpha),
            'time': {'t_max': self.t_max, 'n_steps': self.n_steps},
        }

    def times(self):
        return np.linspace(0, self.t_max, self.n_steps)


@dataclass(frozen=True)
class Fig1Config:
    """ Grid of (xi, eta) for the closed-form eigenvalues mu1, mu2 """
    xi_values: tuple
    eta_min: float
    eta_max: float
    n_points: int
    suppress_prefactor: bool = True
    alpha: complex = 1 + 0j

    @classmethod
    def from_dict(cls, d):
        xi_values = _require(d, 'xi_values', '')
        if not isinstance(xi_values, list) or len(xi_values) == 0:
            raise ConfigError('expected a non-empty list', field='xi_values')
        xis = []
        for i, xi in enumerate(xi_values):
            xi = _number(xi, f'xi_values[{i}]')
            if not 0 <= xi <= 1:
                raise ConfigError(f'must lie in [0, 1], got {xi}', field=f'xi_values[{i}]')
            xis.append(xi)
        eta = _require(d, 'eta', '')
        n_points = _number(_require(eta, 'n_points', 'eta'), 'eta.n_points', integer=True)
        if n_points < 2:
            raise ConfigError(f'must be >= 2, got {n_points}', field='eta.n_points')
        suppress = d.get('suppress_prefactor', True)
        if not isinstance(suppress, bool):
            raise ConfigError(f'expected true or false, got {suppress!r}', field='suppress_prefactor')
        alpha = _complex(d['alpha'], 'alpha') if 'alpha' in d else 1 + 0j
        return cls(
            xi_values=tuple(xis),
            eta_min=_number(_require(eta, 'min', 'eta'), 'eta.min'),
            eta_max=_number(_require(eta, 'max', 'eta'), 'eta.max'),
            n_points=n_points,
            suppress_prefactor=suppress,
            alpha=alpha,
        )

    def to_dict(self):
        return {
            'xi_values': list(self.xi_values),
            'eta': {'min': self.eta_min, 'max': self.eta_max, 'n_points': self.n_points},
            'suppress_prefactor': self.suppress_prefactor,
            'alpha': _complex_dict(self.alpha),
        }

    def etas(self):
        return np.linspace(self.eta_min, self.eta_max, self.n_points)


CONFIG_KINDS = {
    'simulate': SimConfig,
    'fig1': Fig1Config,
}


def load_default_config(kind):
    """ Shipped default configuration for 'simulate' or 'fig1' """
    filename = os.path.join(os.path.dirname(os.path.realpath(__file__)), DEFAULT_PARAMETERS)
    with open(filename) as f:
        params = json.load(f)
    return CONFIG_KINDS[kind].from_dict(params[kind])


def load_config(path, kind):
    """ Read and validate a configuration file

    Parameters
    ----------
    path : str
        JSON file, or 'default' for the shipped defaults
    kind : str
        'simulate' or 'fig1'

    Returns
    -------
    config : SimConfig or Fig1Config

    """
    if path == 'default':
        return load_default_config(kind)
    try:
        with open(path) as f:
            d = json.load(f)
    except OSError as e:
        raise ConfigError(f'cannot read config: {e.strerror}', path=path) from e
    except json.JSONDecodeError as e:
        raise ConfigError(e.msg, path=path, line=e.lineno, column=e.colno) from e
    try:
        return CONFIG_KINDS[kind].from_dict(d)
    except ConfigError as e:
        raise ConfigError(e.message, path=path, field=e.field) from e
    except DephasingError as e:
        raise ConfigError(str(e), path=path) from e
