"""
Job parsing and dispatch

A job is one command applied to one validated input document. `run`
turns it into report text and the process exit code.
"""

import json
import logging
from dataclasses import dataclass, field
from typing import Dict, Tuple

from marshmallow import ValidationError

from orbimod.errors import OrbimodError, SchemaError
from orbimod.schemas import INPUT_SCHEMAS
from orbimod.services import REPORT_BUILDERS
from orbimod.utils.helpers import flatten_field_errors, render_text

logger = logging.getLogger(__name__)

COMMANDS = tuple(INPUT_SCHEMAS)
FORMATS = ('json', 'text')


@dataclass(frozen=True)
class JobSpec:
    command: str
    input: Dict = field(default_factory=dict)
    format: str = 'json'


def parse_input(document: str, command: str, fmt: str = 'json') -> JobSpec:
    """Validate a JSON document against the input schema of `command`"""
    if command not in INPUT_SCHEMAS:
        raise SchemaError(f"Unknown command {command!r}", {'command': [f"must be one of {', '.join(COMMANDS)}"]})
    if fmt not in FORMATS:
        raise SchemaError(f"Unknown format {fmt!r}", {'format': [f"must be one of {', '.join(FORMATS)}"]})

    if not document.strip():
        if command != 'check':
            raise SchemaError("Empty input document", {'_schema': ['a JSON object is required']})
        data = {}
    else:
        try:
            data = json.loads(document)
        except json.JSONDecodeError as e:
            raise SchemaError(f"Invalid JSON: {e.msg} at line {e.lineno} column {e.colno}") from e

    if command == 'check':
        # input ignored
        data = {}
    if not isinstance(data, dict):
        raise SchemaError("Input document must be a JSON object", {'_schema': ['expected an object']})

    try:
        payload = INPUT_SCHEMAS[command]().load(data)
    except ValidationError as e:
        fields = flatten_field_errors(e.messages)
        first = sorted(fields)[0]
        raise SchemaError(f"Schema violation at {first}: {fields[first][0]}", fields) from e

    return JobSpec(command, payload, fmt)


def render(report: Dict, fmt: str, settings, title: str = None) -> str:
    if fmt == 'text':
        return render_text(report, title=title)
    return json.dumps(report, indent=settings.JSON_INDENT, sort_keys=settings.JSON_SORT_KEYS)


def run(job: JobSpec, settings) -> Tuple[str, int]:
    """Build the report for `job`; domain errors become an error report and exit code"""
    try:
        report = REPORT_BUILDERS[job.command](job.input, settings=settings)
    except OrbimodError as e:
        logger.info(f"{job.command} failed: {e.__class__.__name__}: {e.message}")
        return error_output(e, job.format, settings)
    except Exception:
        logger.exception(f"{job.command} crashed")
        raise

    exit_code = 0
    if job.command == 'check' and report['failed']:
        exit_code = 1
    return render(report, job.format, settings, title=job.command), exit_code


def error_output(error: OrbimodError, fmt: str, settings) -> Tuple[str, int]:
    return render(error.to_dict(), fmt, settings, title='error'), error.exit_code
