"""
Helpers shared by the algebra management commands.
"""
import json
from typing import List

from django.conf import settings
from django.core.management.base import CommandError

from algebra.errors import BettiLabError, InvalidParameters
from algebra.homology import FieldSpec

FORMATS = ('table', 'json')


def default_field_code() -> int:
    return getattr(settings, 'BETTI_DEFAULT_FIELD', 2)


def parse_fields(text) -> List[FieldSpec]:
    if text is None or str(text).strip() == '':
        return [FieldSpec.parse(default_field_code())]
    codes = [token.strip() for token in str(text).split(',') if token.strip()]
    if not codes:
        raise InvalidParameters(f"no field codes in {text!r}")
    return [FieldSpec.parse(code) for code in codes]


def parse_runs(text: str) -> List[int]:
    try:
        runs = [int(token) for token in text.split(',') if token.strip()]
    except ValueError:
        raise InvalidParameters(f"--runs expects comma-separated positive integers, got {text!r}")
    if not runs or any(r < 1 for r in runs):
        raise InvalidParameters(f"--runs expects comma-separated positive integers, got {text!r}")
    return runs


def as_command_error(exc: BettiLabError) -> CommandError:
    """Exit 2 for invalid parameters, 3 for resource limits, 1 otherwise."""
    return CommandError(str(exc), returncode=exc.exit_code)


def dump_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2)
