import json
from logging.handlers import RotatingFileHandler

import pytest

from orbimod.app import configure_logging
from orbimod.config import ProductionConfig, TestingConfig
from orbimod.errors import SchemaError
from orbimod.routes.jobs import JobSpec, parse_input, run
from orbimod.schemas import ERROR_SCHEMA, REPORT_SCHEMAS

ROUND_TRIP_CASES = [
    ('surface', 'surface_triangle.json'),
    ('bundle', 'bundle_sextic.json'),
    ('strata', 'strata_genus_one.json'),
    ('strata', 'strata_quintic.json'),
    ('poincare', 'poincare_genus_one.json'),
    ('spectral', 'spectral_genus_two.json'),
    ('reps', 'reps_genus_two.json'),
]


def test_strata_genus_one(invoke, load_fixture):
    result = invoke('strata', '--input', '-', document=load_fixture('strata_genus_one.json'))
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert len(report['strata']) == 1
    assert report['strata'][0]['index'] == 2
    assert report['strata'][0]['value_over_2pi'] == '1/2'
    assert report['minimum']['kind'] == 'stable_bundles_moduli'
    assert report['assumptions'] == ['perfect_morse']


def test_strata_output_is_deterministic(invoke, load_fixture):
    document = load_fixture('strata_quintic.json')
    outputs = {invoke('strata', document=document).output for _ in range(3)}
    assert len(outputs) == 1
    assert json.loads(outputs.pop())['poincare']['coeffs'] == [1, 0, 5]


@pytest.mark.parametrize(('command', 'fixture'), ROUND_TRIP_CASES)
def test_report_round_trip(invoke, load_fixture, command, fixture):
    result = invoke(command, document=load_fixture(fixture))
    assert result.exit_code == 0, result.output
    report = json.loads(result.output)
    REPORT_SCHEMAS[command]().load(report)


def test_surface_report(invoke, load_fixture):
    report = json.loads(invoke('surface', document=load_fixture('surface_triangle.json')).output)
    assert report['euler_characteristic'] == '-1/42'
    assert report['canonical_bundle'] == {'b': -2, 'y': [1, 2, 6], 'c1': '1/42'}
    assert report['teichmuller_dimension'] == 0
    assert report['conical_metric']['cone_angles_over_pi'] == ['1', '2/3', '2/7']
    assert report['degree_quantum'] == 42
    assert len(report['topological_roots']) == 1


def test_bundle_report(invoke, load_fixture):
    report = json.loads(invoke('bundle', document=load_fixture('bundle_sextic.json')).output)
    assert report['moduli_dimension'] == 6
    assert report['reducible'] == {'m': -1, 'eps': [-1, 1, 1, 1, 1, 1]}
    assert report['hyperelliptic_equal_dimension'] is True
    assert report['stability']['verdict'] == 'yes'
    assert report['sub']['on_wall'] is True
    assert report['sub']['semistable_h0']['h0_EKL'] == 2
    assert report['line_bundle']['chi'] == 1


def test_reps_report(invoke, load_fixture):
    report = json.loads(invoke('reps', document=load_fixture('reps_genus_two.json')).output)
    assert report['milnor_wood'] == {'euler_class': '5/2', 'bound': '5/2', 'holds': True}
    assert report['rotation']['dimension'] == 8
    assert report['rotation']['reducible'] is None
    assert report['teichmuller_component']['rank'] == 4
    assert report['z2_presentation']['relations'][-1] == [['h', 2]]


def test_schema_error_names_field_path(invoke, load_fixture):
    result = invoke('strata', document=load_fixture('bad_alpha.json'))
    assert result.exit_code == 2
    report = json.loads(result.output)
    assert report['error'] == 'SchemaError'
    assert 'cone_points[0].alpha' in report['fields']
    ERROR_SCHEMA().load(report)


@pytest.mark.parametrize(('document', 'path'), [
    ({'genus': 0, 'cone_points': [{'alpha': 3, 'x': 2, 'x_prime': 1}], 'l': 0}, 'cone_points[0].x'),
    ({'genus': 0, 'cone_points': [{'alpha': 3, 'x': 0, 'x_prime': 3}], 'l': 0}, 'cone_points[0].x_prime'),
    ({'genus': 0, 'cone_points': [], 'l': 0}, 'cone_points'),
    ({'genus': -1, 'cone_points': [{'alpha': 3, 'x': 0, 'x_prime': 1}], 'l': 0}, 'genus'),
    ({'genus': 0, 'cone_points': [{'alpha': 3, 'x': 0, 'x_prime': 1}]}, 'l'),
    ({'genus': 0, 'cone_points': [{'alpha': 3, 'x': 0, 'x_prime': 1}], 'l': 0, 'extra': 1}, 'extra'),
])
def test_schema_errors(document, path):
    with pytest.raises(SchemaError) as excinfo:
        parse_input(json.dumps(document), 'bundle')
    assert path in excinfo.value.fields
    assert excinfo.value.exit_code == 2


def test_schema_error_for_mismatched_sub_bundle():
    document = {
        'genus': 1,
        'cone_points': [{'alpha': 2, 'x': 0, 'x_prime': 1}],
        'l': 0,
        'sub': {'m': 0, 'eps': [0]},
    }
    with pytest.raises(SchemaError):
        parse_input(json.dumps(document), 'bundle')


def test_invalid_json_is_a_schema_error(invoke):
    result = invoke('surface', document='{"genus": 0,')
    assert result.exit_code == 2
    assert json.loads(result.output)['error'] == 'SchemaError'


def test_domain_error_exit_code(invoke):
    document = json.dumps({
        'genus': 0,
        'cone_points': [{'alpha': 3, 'x': 0, 'x_prime': 1}, {'alpha': 3, 'x': 0, 'x_prime': 1}],
        'l': 0,
    })
    result = invoke('spectral', document=document)
    assert result.exit_code == 1
    report = json.loads(result.output)
    assert report['error'] == 'HypothesisError'
    assert report['citation']


def test_incompatible_rotation_is_a_domain_error(invoke):
    document = json.dumps({'genus': 2, 'alphas': [3], 'lambda': {'b': 0, 'y': [1]}, 'rotation': [2]})
    result = invoke('reps', document=document)
    assert result.exit_code == 1
    assert json.loads(result.output)['error'] == 'IncompatibleIsotropyError'


def test_text_format(invoke, load_fixture):
    result = invoke('strata', '--format', 'text', document=load_fixture('strata_quintic.json'))
    assert result.exit_code == 0
    assert result.output.startswith('== strata ==')
    assert 'value_over_2pi' in result.output


def test_parse_input_and_run(settings, load_fixture):
    job = parse_input(load_fixture('spectral_genus_two.json'), 'spectral')
    assert isinstance(job, JobSpec)
    assert job.command == 'spectral'
    output, exit_code = run(job, settings)
    assert exit_code == 0
    report = json.loads(output)
    assert report['fibre'] == {'kind': 'prym', 'dim': 4}
    assert report['special_case'] is None


def test_unknown_command():
    with pytest.raises(SchemaError):
        parse_input('{}', 'teichmuller')


def _file_handlers(logger):
    return [h for h in logger.handlers if isinstance(h, RotatingFileHandler)]


def test_file_logging_only_outside_testing(tmp_path):
    log_file = str(tmp_path / 'logs' / 'orbimod.log')
    production = type('LoggedProduction', (ProductionConfig,), {'LOG_FILE': log_file})
    testing = type('LoggedTesting', (TestingConfig,), {'LOG_FILE': log_file})
    try:
        assert len(_file_handlers(configure_logging(production))) == 1
        assert (tmp_path / 'logs').is_dir()
        assert _file_handlers(configure_logging(testing)) == []
    finally:
        configure_logging(TestingConfig)
