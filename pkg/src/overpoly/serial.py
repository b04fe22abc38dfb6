"""JSON-safe encoding for report payloads.

Fractions become "p/q" strings (always with the slash), tuples become lists;
decoding reverses both, so a report round-trips through json.dumps/loads into
a structurally equal value.  Payload strings that themselves look like "p/q"
would be mis-decoded; report fields never contain such strings.
"""

from __future__ import annotations

import re
from fractions import Fraction

_FRACTION_RE = re.compile(r"^-?\d+/\d+$")


def encode(value):
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    if isinstance(value, dict):
        return {str(k): encode(v) for k, v in value.items()}
    return value


def decode(value):
    if isinstance(value, str) and _FRACTION_RE.match(value):
        return Fraction(value)
    if isinstance(value, list):
        return tuple(decode(v) for v in value)
    if isinstance(value, dict):
        return {k: decode(v) for k, v in value.items()}
    return value
