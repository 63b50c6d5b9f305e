"""Python front end over the exact C++ core.

Every function takes an input document (a dict or a JSON string) and
returns the same report the command line tool prints, decoded into Python
objects. Rational numbers arrive as ``"p/q"`` strings; ``fraction`` turns
them into :class:`fractions.Fraction`.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Iterable, Mapping, Optional, Union

from . import _tropcay
from ._tropcay import PreconditionError, SchemaError, TropcayError, UnsupportedError

Document = Union[str, Mapping[str, Any]]
Number = Union[int, Fraction, str]

__all__ = [
    "TropcayError",
    "SchemaError",
    "UnsupportedError",
    "PreconditionError",
    "fraction",
    "canonical_input",
    "arrangement",
    "covector",
    "tconv",
    "mixed",
    "ricardo",
    "plot",
]


def _text(doc: Document) -> str:
    return doc if isinstance(doc, str) else json.dumps(doc)


def _numbers(values: Optional[Iterable[Number]]):
    if values is None:
        return None
    return [str(v) for v in values]


def fraction(value: Any) -> Any:
    """Exact value of a report number; ``"inf"`` and ``None`` pass through."""
    if isinstance(value, str) and value != "inf":
        return Fraction(_tropcay.parse_rational(value))
    if isinstance(value, int):
        return Fraction(value)
    return value


def canonical_input(doc: Document) -> dict:
    return json.loads(_tropcay.canonical_input(_text(doc)))


def arrangement(doc: Document, *, poly: bool = False, cells: bool = False, dual: bool = False) -> dict:
    return json.loads(_tropcay.arrangement(_text(doc), poly, cells, dual))


def covector(doc: Document, point: Iterable[Number]) -> dict:
    return json.loads(_tropcay.covector(_text(doc), _numbers(point)))


def tconv(doc: Document) -> dict:
    return json.loads(_tropcay.tconv(_text(doc)))


def mixed(doc: Document) -> dict:
    return json.loads(_tropcay.mixed(_text(doc)))


def ricardo(
    doc: Document,
    *,
    wages: Optional[Iterable[Number]] = None,
    prices: Optional[Iterable[Number]] = None,
    equilibrate: bool = False,
) -> dict:
    return json.loads(_tropcay.ricardo(_text(doc), _numbers(wages), _numbers(prices), equilibrate))


def plot(doc: Document, what: str = "arrangement") -> str:
    """SVG text for ``"arrangement"`` or ``"mixed"``."""
    return _tropcay.plot(_text(doc), what)
