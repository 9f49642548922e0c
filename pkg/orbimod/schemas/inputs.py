"""
Input schemas for the orbimod commands
Validate the JSON documents and build the domain objects they describe
"""

from marshmallow import Schema, ValidationError, fields, post_load, validate, validates_schema

from orbimod.errors import OrbimodError
from orbimod.models import (
    IsotropyVector,
    LaurentPoly,
    LineVBundle,
    OrbifoldSurface,
    RankTwoVBundle,
    RotationData,
    StabilityClass,
    StabilityKind,
    SubBundleSpec,
)
from orbimod.schemas.fields import Rational

MAX_GENUS = 10000
MAX_ALPHA = 10000
MAX_POINTS = 64
MAX_INTEGER = 10 ** 6


def genus_field():
    return fields.Integer(required=True, strict=True, validate=validate.Range(min=0, max=MAX_GENUS))


def alpha_field(**kwargs):
    return fields.Integer(strict=True, validate=validate.Range(min=2, max=MAX_ALPHA), **kwargs)


def bounded_int(**kwargs):
    return fields.Integer(strict=True, validate=validate.Range(min=-MAX_INTEGER, max=MAX_INTEGER), **kwargs)


def _build(factory, *args):
    """Turn a domain error raised while building an object into a schema error"""
    try:
        return factory(*args)
    except OrbimodError as e:
        raise ValidationError(e.message) from e


class ConePointSchema(Schema):
    alpha = alpha_field(required=True)
    x = fields.Integer(required=True, strict=True, validate=validate.Range(min=0))
    x_prime = fields.Integer(required=True, strict=True, validate=validate.Range(min=0))

    @validates_schema
    def validate_pair(self, data, **kwargs):
        if 'x' in data and 'x_prime' in data and data['x'] > data['x_prime']:
            raise ValidationError("x must not exceed x_prime.", 'x')
        if 'alpha' in data and 'x_prime' in data and data['x_prime'] >= data['alpha']:
            raise ValidationError("x_prime must be smaller than alpha.", 'x_prime')


class SurfaceFragmentSchema(Schema):
    genus = genus_field()
    alphas = fields.List(alpha_field(), required=True, validate=validate.Length(min=1, max=MAX_POINTS))

    @staticmethod
    def build_surface(data):
        return _build(OrbifoldSurface, data['genus'], tuple(data['alphas']))


class BundleFragmentSchema(Schema):
    genus = genus_field()
    cone_points = fields.List(
        fields.Nested(ConePointSchema), required=True, validate=validate.Length(min=1, max=MAX_POINTS)
    )
    l = bounded_int(required=True)

    @staticmethod
    def build_bundle(data):
        alphas = tuple(point['alpha'] for point in data['cone_points'])
        surface = _build(OrbifoldSurface, data['genus'], alphas)
        pairs = tuple((point['x'], point['x_prime']) for point in data['cone_points'])
        return _build(RankTwoVBundle, surface, pairs, data['l'])


class LineBundleSchema(Schema):
    b = bounded_int(required=True)
    y = fields.List(fields.Integer(strict=True, validate=validate.Range(min=0)), required=True)


class StabilityClassSchema(Schema):
    class_ = fields.String(
        data_key='class', required=True, validate=validate.OneOf([kind.value for kind in StabilityKind])
    )
    h0_klm2 = fields.Integer(strict=True, allow_none=True, load_default=None, validate=validate.Range(min=0))
    h0_kl2 = fields.Integer(strict=True, allow_none=True, load_default=None, validate=validate.Range(min=0))


class SubBundleSchema(Schema):
    m = bounded_int(required=True)
    eps = fields.List(fields.Integer(strict=True, validate=validate.OneOf([-1, 0, 1])), required=True)


class SurfaceInputSchema(SurfaceFragmentSchema):
    @post_load
    def make_job_input(self, data, **kwargs):
        return {'surface': self.build_surface(data)}


class BundleInputSchema(BundleFragmentSchema):
    stability = fields.Nested(StabilityClassSchema)
    sub = fields.Nested(SubBundleSchema)
    line_bundle = fields.Nested(LineBundleSchema)

    @post_load
    def make_job_input(self, data, **kwargs):
        bundle = self.build_bundle(data)
        payload = {'bundle': bundle, 'stability': None, 'sub': None, 'line_bundle': None}
        if 'stability' in data:
            stability = data['stability']
            payload['stability'] = _build(
                StabilityClass, stability['class_'], stability['h0_klm2'], stability['h0_kl2']
            )
        if 'sub' in data:
            eps = _build(IsotropyVector, tuple(data['sub']['eps']))
            if not eps.compatible_with(bundle):
                raise ValidationError("eps must be zero exactly where x = x_prime.", 'sub')
            payload['sub'] = SubBundleSpec(data['sub']['m'], eps)
        if 'line_bundle' in data:
            line = data['line_bundle']
            payload['line_bundle'] = _build(LineVBundle, bundle.surface, line['b'], tuple(line['y']))
        return payload


class StrataInputSchema(BundleFragmentSchema):
    @post_load
    def make_job_input(self, data, **kwargs):
        return {'bundle': self.build_bundle(data)}


class PoincareInputSchema(BundleFragmentSchema):
    min_poly = fields.List(fields.Integer(strict=True))
    cover_polys = fields.Dict(
        keys=fields.String(validate=validate.Regexp(r'^\d+$')),
        values=fields.List(fields.Integer(strict=True)),
    )
    chi_min = fields.Integer(strict=True, allow_none=True, load_default=None)

    @post_load
    def make_job_input(self, data, **kwargs):
        min_poly = data.get('min_poly')
        cover_polys = data.get('cover_polys') or {}
        return {
            'bundle': self.build_bundle(data),
            'min_poly': LaurentPoly(tuple(min_poly)) if min_poly is not None else None,
            'cover_polys': {int(r): LaurentPoly(tuple(coeffs)) for r, coeffs in cover_polys.items()},
            'chi_min': data['chi_min'],
        }


class SpectralInputSchema(StrataInputSchema):
    pass


class RepsInputSchema(SurfaceFragmentSchema):
    lambda_ = fields.Nested(LineBundleSchema, data_key='lambda', required=True)
    rotation = fields.List(fields.Integer(strict=True, validate=validate.Range(min=0)))
    euler_class = Rational()

    @post_load
    def make_job_input(self, data, **kwargs):
        surface = self.build_surface(data)
        det = _build(LineVBundle, surface, data['lambda_']['b'], tuple(data['lambda_']['y']))
        rotation = data.get('rotation')
        if rotation is not None:
            rotation = _build(RotationData, tuple(rotation), surface.cone_orders)
        return {'surface': surface, 'lambda': det, 'rotation': rotation, 'euler_class': data.get('euler_class')}


class CheckInputSchema(Schema):
    @post_load
    def make_job_input(self, data, **kwargs):
        return {}


INPUT_SCHEMAS = {
    'surface': SurfaceInputSchema,
    'bundle': BundleInputSchema,
    'strata': StrataInputSchema,
    'poincare': PoincareInputSchema,
    'spectral': SpectralInputSchema,
    'reps': RepsInputSchema,
    'check': CheckInputSchema,
}
