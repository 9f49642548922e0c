"""
Report schemas for the orbimod commands

Every JSON document the CLI emits loads cleanly under the schema of its
command; docs/schema.json is the published form of these classes.
"""

from marshmallow import Schema, fields

from orbimod.schemas.fields import Rational
from orbimod.schemas.inputs import ConePointSchema


class SurfaceDictSchema(Schema):
    genus = fields.Integer(required=True)
    alphas = fields.List(fields.Integer(), required=True)


class LineBundleReportSchema(Schema):
    b = fields.Integer(required=True)
    y = fields.List(fields.Integer(), required=True)
    c1 = Rational(required=True)


class BundleDictSchema(Schema):
    genus = fields.Integer(required=True)
    cone_points = fields.List(fields.Nested(ConePointSchema), required=True)
    l = fields.Integer(required=True)


class PresentationSchema(Schema):
    generators = fields.List(fields.String(), required=True)
    relations = fields.List(
        fields.List(fields.Tuple((fields.String(), fields.Integer()))), required=True
    )


class RealComponentSchema(Schema):
    kind = fields.String(required=True)
    rank = fields.Integer(required=True)
    base_sym_power = fields.Integer(required=True)
    cover_order = fields.Integer(required=True)
    complex_dim = fields.Integer(required=True)
    nonempty = fields.Boolean(required=True)
    m = fields.Integer()
    eps = fields.List(fields.Integer())
    euler_class = Rational()


class RotationDataSchema(Schema):
    r = fields.List(fields.Integer(), required=True)
    n0 = fields.Integer(required=True)


class SubSpecSchema(Schema):
    m = fields.Integer(required=True)
    eps = fields.List(fields.Integer(), required=True)


class ConicalMetricSchema(Schema):
    exists_unique = fields.Boolean(required=True)
    cone_angles_over_pi = fields.List(Rational(), required=True)


class SurfaceReportSchema(Schema):
    surface = fields.Nested(SurfaceDictSchema, required=True)
    euler_characteristic = Rational(required=True)
    hyperbolic = fields.Boolean(required=True)
    degree_quantum = fields.Integer(required=True)
    canonical_bundle = fields.Nested(LineBundleReportSchema, required=True)
    teichmuller_dimension = fields.Integer(required=True, allow_none=True)
    conical_metric = fields.Nested(ConicalMetricSchema, required=True)
    presentation = fields.Nested(PresentationSchema, required=True)
    topological_roots = fields.List(fields.Nested(LineBundleReportSchema), required=True)
    real_lift_count = fields.Integer(required=True)


class ParabolicWeightSchema(Schema):
    lambda_ = Rational(data_key='lambda', required=True)
    lambda_prime = Rational(required=True)
    degenerate = fields.Boolean(required=True)


class ReductionSchema(Schema):
    surface = fields.Nested(SurfaceDictSchema, required=True)
    bundle = fields.Nested(BundleDictSchema, required=True)
    dropped_points = fields.List(fields.Integer(), required=True)
    note = fields.String(required=True)


class StabilityInputEchoSchema(Schema):
    class_ = fields.String(data_key='class', required=True)
    h0_klm2 = fields.Integer(allow_none=True, required=True)
    h0_kl2 = fields.Integer(allow_none=True, required=True)


class VerdictSchema(Schema):
    input = fields.Nested(StabilityInputEchoSchema, required=True)
    verdict = fields.String(required=True)
    conditions = fields.List(fields.String(), required=True)
    citations = fields.List(fields.String(), required=True)
    flags = fields.List(fields.String(), required=True)


class SubReportSchema(SubSpecSchema):
    degree = Rational(required=True)
    isotropy = fields.List(fields.Integer(), required=True)
    chi_twists = fields.List(fields.Integer(), required=True)
    on_wall = fields.Boolean(required=True)
    all_higgs_invariant = fields.Boolean(required=True)
    semistable_h0 = fields.Dict(keys=fields.String(), values=fields.Integer(), required=True, allow_none=True)


class ForcedH0Schema(Schema):
    kind = fields.String(required=True)
    value = fields.Integer(required=True, allow_none=True)


class LineReportSchema(LineBundleReportSchema):
    chi = fields.Integer(required=True)
    h0_forced = fields.Nested(ForcedH0Schema, required=True)
    smooth_degree = fields.Integer(required=True)
    serre_partner = fields.Nested(LineBundleReportSchema, required=True)


class BundleReportSchema(Schema):
    bundle = fields.Nested(BundleDictSchema, required=True)
    n0 = fields.Integer(required=True)
    determinant = fields.Nested(LineBundleReportSchema, required=True)
    determinant_squarefree = fields.Nested(LineBundleReportSchema, required=True)
    moduli_dimension = fields.Integer(required=True)
    real_dimension = fields.Integer(required=True)
    parabolic_weights = fields.List(fields.Nested(ParabolicWeightSchema), required=True)
    reduction = fields.Nested(ReductionSchema, required=True, allow_none=True)
    reducible = fields.Nested(SubSpecSchema, required=True, allow_none=True)
    bounds_attainable = fields.Boolean(required=True)
    stable_bundles_possible = fields.Boolean(required=True)
    end0_chi = fields.Integer(required=True)
    hyperelliptic_equal_dimension = fields.Boolean(required=True)
    rotation_numbers = fields.Nested(RotationDataSchema, required=True)
    stability = fields.Nested(VerdictSchema)
    sub = fields.Nested(SubReportSchema)
    line_bundle = fields.Nested(LineReportSchema)


class StratumSchema(SubSpecSchema):
    value_over_2pi = Rational(required=True)
    index = fields.Integer(required=True)
    r = fields.Integer(required=True)
    cover = fields.Integer(required=True)


class MinStratumSchema(Schema):
    kind = fields.String(required=True)
    complex_dim = fields.Integer(required=True)
    stratum = fields.Nested(StratumSchema, required=True, allow_none=True)


class SymbolicTermSchema(Schema):
    label = fields.String(required=True)
    shift = fields.Integer(required=True)
    multiplicity = fields.Integer(required=True)


class LaurentPolySchema(Schema):
    coeffs = fields.List(fields.Integer(), required=True)
    symbolic = fields.List(fields.Nested(SymbolicTermSchema), required=True)


class TopologySchema(Schema):
    connected = fields.Boolean(required=True)
    simply_connected = fields.Boolean(required=True)
    compact = fields.Boolean(required=True)
    isolated_point = fields.Boolean(required=True)
    real_dim = fields.Integer(required=True)


class StrataReportSchema(Schema):
    strata = fields.List(fields.Nested(StratumSchema), required=True)
    minimum = fields.Nested(MinStratumSchema, required=True)
    poincare = fields.Nested(LaurentPolySchema, required=True)
    assumptions = fields.List(fields.String(), required=True)
    topology = fields.Nested(TopologySchema, required=True)


class PoincareReportSchema(Schema):
    poincare = fields.Nested(LaurentPolySchema, required=True)
    total_betti = fields.Integer(required=True, allow_none=True)
    euler_characteristic = fields.Integer(required=True, allow_none=True)
    assumptions = fields.List(fields.String(), required=True)


class FibreSchema(Schema):
    kind = fields.String(required=True)
    dim = fields.Integer(required=True)


class SpecialCaseSchema(Schema):
    degree = Rational(required=True)
    isotropy = fields.Integer(required=True)


class NonstableLocusSchema(Schema):
    finite = fields.Boolean(required=True)
    points = fields.Integer(required=True, allow_none=True)
    citation = fields.String(required=True)


class SpectralReportSchema(Schema):
    base_dim = fields.Integer(required=True)
    branch_points = fields.Integer(required=True, allow_none=True)
    spectral_genus = fields.Integer(required=True, allow_none=True)
    fibre = fields.Nested(FibreSchema, required=True)
    generic_caveat = fields.Boolean(required=True)
    special_case = fields.Nested(SpecialCaseSchema, required=True, allow_none=True)
    nonstable_locus = fields.Nested(NonstableLocusSchema, required=True)


class RotationReportSchema(RotationDataSchema):
    dimension = fields.Integer(required=True)
    reducible = fields.List(fields.Integer(), required=True, allow_none=True)
    sign_twist_orbit = fields.List(fields.Nested(RotationDataSchema), required=True)
    parity_consistent = fields.Boolean(required=True)


class MilnorWoodSchema(Schema):
    euler_class = Rational(required=True)
    bound = Rational(required=True)
    holds = fields.Boolean(required=True)


class RepsReportSchema(Schema):
    lambda_ = fields.Nested(LineBundleReportSchema, data_key='lambda', required=True)
    euler_class = Rational(required=True)
    circle_presentation = fields.Nested(PresentationSchema, required=True)
    z2_presentation = fields.Nested(PresentationSchema, required=True)
    rotation_numbers = fields.List(fields.Nested(RotationDataSchema), required=True)
    teichmuller_component = fields.Nested(RealComponentSchema, required=True, allow_none=True)
    psl2r_component = fields.Nested(RealComponentSchema, required=True, allow_none=True)
    rotation = fields.Nested(RotationReportSchema)
    milnor_wood = fields.Nested(MilnorWoodSchema)


class SuiteReportSchema(Schema):
    name = fields.String(required=True)
    cases = fields.Integer(required=True)
    passed = fields.Integer(required=True)
    failed = fields.Integer(required=True)
    failures = fields.List(fields.String(), required=True)


class CheckReportSchema(Schema):
    suites = fields.List(fields.Nested(SuiteReportSchema), required=True)
    passed = fields.Integer(required=True)
    failed = fields.Integer(required=True)


class ErrorReportSchema(Schema):
    error = fields.String(required=True)
    message = fields.String(required=True)
    citation = fields.String(required=True, allow_none=True)
    exit_code = fields.Integer(required=True)
    fields_ = fields.Dict(keys=fields.String(), values=fields.List(fields.String()), data_key='fields')


REPORT_SCHEMAS = {
    'surface': SurfaceReportSchema,
    'bundle': BundleReportSchema,
    'strata': StrataReportSchema,
    'poincare': PoincareReportSchema,
    'spectral': SpectralReportSchema,
    'reps': RepsReportSchema,
    'check': CheckReportSchema,
}

ERROR_SCHEMA = ErrorReportSchema
