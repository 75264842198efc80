import csv
import io
import math

import numpy as np
import pytest

from dephasing import tools
from dephasing.checks import DEPHASING_TABLE, check_dephasing_table, parse_factor
from dephasing.config import Fig1Config, SimConfig, load_default_config
from dephasing.errors import NoConvergence
from dephasing.tools import (
    FIG1_COLUMNS,
    SIMULATE_COLUMNS,
    run_fig1,
    run_simulate,
    run_verify,
    simulate_row,
)

SIM_DICT = {
    'qubit1': {'a': 0.7, 'bath': {'beta': 3.0, 'ohmic': {
        'amplitude': 0.3, 's': 1.0, 'omega_c': 4.0, 'n_modes': 50, 'omega_max': 20.0,
    }}},
    'qubit2': {'a': 0.7, 'bath': {'beta': 'inf', 'modes': [
        {'omega': 1.0, 'g_re': 0.2}, {'omega': 3.0, 'g_re': 0.1, 'g_im': 0.3},
    ]}},
    'alpha': {'re': 0.5, 'im': 1.5},
    'time': {'t_max': 6.0, 'n_steps': 31},
}


def read_csv(text):
    rows = list(csv.reader(io.StringIO(text)))
    return rows[0], np.array(rows[1:], dtype=float)


def simulate(config, cores=1):
    stream = io.StringIO()
    run_simulate(config, stream, cores=cores)
    return stream.getvalue()


def test_simulate_rows():
    config = SimConfig.from_dict(SIM_DICT)
    header, data = read_csv(simulate(config))
    assert header == SIMULATE_COLUMNS
    assert data.shape == (31, len(SIMULATE_COLUMNS))
    column = dict(zip(header, data.T))
    alpha = config.alpha
    c0 = 2 * abs(alpha) / (1 + abs(alpha)**2)
    assert column['G1'][0] == 0 and column['G2'][0] == 0
    assert column['q1'][0] == 1 and column['q2'][0] == 1
    assert column['concurrence_general'][0] == pytest.approx(c0, abs=1e-10)
    product_law = c0 * np.exp(-4 * (column['G1'] + column['G2']))
    assert np.allclose(column['concurrence_general'], product_law, atol=1e-10, rtol=0)
    assert np.allclose(column['concurrence_general'], column['concurrence_analytic'], atol=1e-10, rtol=0)


def test_simulate_is_deterministic():
    config = SimConfig.from_dict(SIM_DICT)
    assert simulate(config) == simulate(config)


def test_simulate_does_not_depend_on_cores():
    config = SimConfig.from_dict(SIM_DICT)
    assert simulate(config, cores=1) == simulate(config, cores=2)


def test_simulate_warns_on_detuning(caplog):
    d = dict(SIM_DICT, qubit2=dict(SIM_DICT['qubit2'], a=1.2))
    with caplog.at_level('WARNING', logger='dephasing.tools'):
        header, data = read_csv(simulate(SimConfig.from_dict(d)))
    assert 'detuned' in caplog.text
    column = dict(zip(header, data.T))
    c0 = 2 * 1.5811388300841898 / (1 + 2.5)
    assert np.allclose(column['concurrence_general'], c0 * column['q1'] * column['q2'], atol=1e-10, rtol=0)


def test_simulate_row_values():
    config = load_default_config('simulate')
    params = config.qubit1.to_params()
    row = dict(zip(SIMULATE_COLUMNS, simulate_row(params, params, 1., 2.)))
    assert row['t'] == 2.
    assert row['q1'] == pytest.approx(math.exp(-4 * row['G1']))
    assert complex(row['re_p1'], row['im_p1']) == pytest.approx(np.exp(4j))
    assert row['mu1'] * row['mu2'] == pytest.approx((1 - (row['q1'] * row['q2'])**2)**2 / 16, abs=1e-15)


def test_csv_values_are_exact():
    config = SimConfig.from_dict(SIM_DICT)
    stream = io.StringIO()
    rows = run_simulate(config, stream)
    _, data = read_csv(stream.getvalue())
    assert np.array_equal(data, np.array(rows, dtype=float))


def test_fig1_grid():
    config = Fig1Config.from_dict({
        'xi_values': [0., 1.],
        'eta': {'min': 0., 'max': math.pi / 2, 'n_points': 3},
    })
    stream = io.StringIO()
    run_fig1(config, stream)
    header, data = read_csv(stream.getvalue())
    assert header == FIG1_COLUMNS
    assert data.shape == (6, 4)
    xi0, xi1 = data[:3], data[3:]
    assert np.array_equal(xi0[:, 2:], np.ones((3, 2)))
    assert xi1[0, 2:] == pytest.approx([4., 0.], abs=1e-15)
    assert xi1[2, 2:] == pytest.approx([0., 0.], abs=1e-15)


def test_fig1_prefactor():
    d = {
        'xi_values': [0.5],
        'eta': {'min': 0., 'max': 1., 'n_points': 2},
        'suppress_prefactor': False,
        'alpha': {'re': 2., 'im': 0.},
    }
    stream = io.StringIO()
    rows = run_fig1(Fig1Config.from_dict(d), stream)
    assert rows[0][2] == pytest.approx(4 / 25 * 1.5**2)
    assert rows[0][3] == pytest.approx(4 / 25 * 0.5**2)


def test_default_fig1():
    stream = io.StringIO()
    rows = run_fig1(load_default_config('fig1'), stream)
    assert len(rows) == 5 * 181
    assert all(mu1 >= mu2 >= 0 for _, _, mu1, mu2 in rows)


def test_dephasing_table_parser():
    assert parse_factor('1') == (0, 0, 0, 0)
    assert parse_factor('p1* q1 p2 q2') == (-1, 1, 1, 1)
    assert len(DEPHASING_TABLE) == 4
    assert check_dephasing_table().passed


def test_verify_passes():
    stream = io.StringIO()
    results = run_verify(seed=0, samples=200, stream=stream)
    lines = stream.getvalue().splitlines()
    assert all(r.passed for r in results), [r.line() for r in results if not r.passed]
    assert len(results) == 16
    assert lines[-1] == 'ALL 16 CHECKS PASSED'
    assert all(line.startswith('CHECK ') and ': PASS (' in line for line in lines[:-1])


def test_verify_single_sample_runs_every_check():
    stream = io.StringIO()
    results = run_verify(seed=1, samples=1, stream=stream)
    names = [r.name for r in results]
    assert names[0] == 'eigen_reconstruction'
    assert names[-1] == 'upper_bound'
    assert 'product_law' in names and 'bell_concurrence' in names
    assert all(r.passed for r in results)


def test_verify_zero_tolerance_names_first_failure():
    stream = io.StringIO()
    results = run_verify(seed=0, samples=10, tolerance_scale=0., stream=stream)
    assert not results[0].passed
    assert stream.getvalue().splitlines()[-1] == 'FIRST FAILURE: eigen_reconstruction'


def test_verify_reports_raising_check(monkeypatch):
    def failing():
        raise NoConvergence('no convergence after 100 sweeps')

    suite = tools.verification_suite

    def broken_suite(*args):
        return [('broken', failing)] + suite(*args)[:1]

    monkeypatch.setattr(tools, 'verification_suite', broken_suite)
    stream = io.StringIO()
    results = run_verify(seed=0, samples=5, stream=stream)
    assert [r.passed for r in results] == [False, True]
    assert 'NoConvergence: no convergence after 100 sweeps' in results[0].detail
    assert stream.getvalue().splitlines()[-1] == 'FIRST FAILURE: broken'
