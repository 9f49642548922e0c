from marshmallow import ValidationError, fields

from orbimod.utils.helpers import format_rational, parse_rational


class Rational(fields.Field):
    """Exact rational carried on the wire as an integer or a "p/q" string"""

    default_error_messages = {'invalid': 'Not a valid rational: use an integer or a "p/q" string.'}

    def _serialize(self, value, attr, obj, **kwargs):
        if value is None:
            return None
        return format_rational(value)

    def _deserialize(self, value, attr, data, **kwargs):
        try:
            return parse_rational(value)
        except ValueError as e:
            raise self.make_error('invalid') from e
