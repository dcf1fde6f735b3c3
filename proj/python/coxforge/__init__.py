"""Python access to the coxforge core.

Polynomials are lists of coefficients in ascending degree. Coefficients go in
as ints and come back as ints; everything else is the JSON the CLI emits.
"""

import json

from . import _core

__all__ = ["commands", "run", "is_salem", "word_matrix", "word_char_poly", "strip_cyclotomic", "chi"]


def commands():
    return list(_core.commands())


def run(command, **options):
    """Runs a CLI command; returns (exit_code, report dict)."""
    code, text = _core.run(command, **options)
    return code, json.loads(text)


def is_salem(coeffs, eps="1e-12"):
    return json.loads(_core.is_salem([str(c) for c in coeffs], eps))


def word_matrix(letters, n):
    return json.loads(_core.word_matrix(list(letters), n))


def word_char_poly(letters, n):
    return [int(c) for c in _core.word_char_poly(list(letters), n)]


def strip_cyclotomic(coeffs):
    return [int(c) for c in _core.strip_cyclotomic([str(c) for c in coeffs])]


def chi(n):
    return [int(c) for c in _core.chi(n)]
