from orbimod.schemas.inputs import INPUT_SCHEMAS
from orbimod.schemas.reports import ERROR_SCHEMA, REPORT_SCHEMAS

__all__ = ['INPUT_SCHEMAS', 'REPORT_SCHEMAS', 'ERROR_SCHEMA']
