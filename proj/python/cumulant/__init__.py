"""Exact cumulant bijections for graded commutative algebras."""

import json
from fractions import Fraction
from pathlib import Path

from . import _core
from ._core import CumulantError, MismatchError, SchemaError, ValidationError

__all__ = [
    "Algebra",
    "CumulantContext",
    "CumulantError",
    "MismatchError",
    "SchemaError",
    "ValidationError",
    "cumulants",
    "derivation_defects",
    "homomorphism_defects",
    "oracle_cumulants",
    "run_cli",
]

DEFAULT_CAP = 6


def _text(doc):
    if isinstance(doc, (str, Path)) and Path(doc).is_file():
        return Path(doc).read_text()
    if isinstance(doc, str):
        return doc
    return json.dumps(doc)


def _coeff(value):
    return str(Fraction(value))


def _element_to_json(element):
    return json.dumps(
        [{"monomial": list(monomial), "coeff": _coeff(c)} for monomial, c in element.items()]
    )


def _element_from_json(text):
    return {tuple(t["monomial"]): Fraction(t["coeff"]) for t in json.loads(text)}


def _vector(terms):
    return {t["gen"]: Fraction(t["coeff"]) for t in terms}


def _family_from_json(text):
    doc = json.loads(text)
    return {
        int(n): {tuple(e["monomial"]): _vector(e["value"]) for e in entries}
        for n, entries in doc["arities"].items()
    }


class Algebra:
    """A validated algebra presentation; wraps the native object."""

    def __init__(self, native):
        self._native = native

    @classmethod
    def from_json(cls, doc):
        """doc: a dict, JSON text, or a path to a JSON file."""
        return cls(_core.Algebra.from_json(_text(doc)))

    load = from_json

    @property
    def label(self):
        return self._native.label

    @property
    def generators(self):
        return list(zip(self._native.generators, self._native.degrees))

    @property
    def dimension(self):
        return self._native.dimension

    def to_json(self):
        return json.loads(self._native.to_json())


class CumulantContext:
    """τ̃ and τ̃⁻¹ of an algebra, tabulated up to a weight cap.

    Elements are dicts from tuples of generator names to rationals.
    """

    def __init__(self, algebra, cap=DEFAULT_CAP):
        self.algebra = algebra
        self._native = _core.CumulantContext(algebra._native, cap)

    @property
    def cap(self):
        return self._native.cap

    def tau_tilde(self, element):
        return _element_from_json(self._native.tau_tilde(_element_to_json(element)))

    def inverse(self, element):
        return _element_from_json(self._native.inverse(_element_to_json(element)))


def homomorphism_defects(f, source, target, cap=DEFAULT_CAP):
    """g^n of a degree-0 map f: {n: {monomial: {generator: Fraction}}}."""
    return _family_from_json(_core.homomorphism_defects(_text(f), source._native, target._native, cap))


def derivation_defects(d, algebra, cap=DEFAULT_CAP):
    """h^n of an endomorphism d, in the same shape as homomorphism_defects."""
    return _family_from_json(_core.derivation_defects(_text(d), algebra._native, cap))


def cumulants(moments, n=None):
    """kappa_1..kappa_n from moments m_1, m_2, ... as Fractions."""
    n = len(moments) if n is None else n
    return [Fraction(k) for k in _core.cumulants([_coeff(m) for m in moments], n)]


def oracle_cumulants(moments, n=None):
    n = len(moments) if n is None else n
    return [Fraction(k) for k in _core.oracle_cumulants([_coeff(m) for m in moments], n)]


def run_cli(args):
    """Runs one CLI job in-process; returns (exit_code, stdout, stderr)."""
    return _core.run_cli([str(a) for a in args])
