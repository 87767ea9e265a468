"""
Shared schema types.

Exact integers cross JSON as plain numbers while they fit a double without
loss, and as decimal strings beyond that.
"""

from typing import Annotated

from pydantic import BeforeValidator, PlainSerializer

JSON_SAFE_INTEGER = 2 ** 53


def to_json_int(value):
    return value if abs(value) <= JSON_SAFE_INTEGER else str(value)


def _parse_int(value):
    if isinstance(value, bool):
        raise ValueError("booleans are not integers here")
    if isinstance(value, str):
        return int(value)
    return value


JsonInt = Annotated[int, BeforeValidator(_parse_int), PlainSerializer(to_json_int, when_used="json")]
