# -*- coding: utf-8 -*-
"""
Exception taxonomy shared by the library and the command-line front end.

Every error carries a stable ``code`` that the CLI echoes back verbatim in
``{"ok": false, "error": {"code": ..., "message": ...}}``.
"""


class AdicError(Exception):
    code = "AdicError"

    def to_dict(self) -> dict:
        return {"code": self.code, "message": str(self)}


class AmbientMismatch(AdicError, ValueError):
    code = "AmbientMismatch"


class PrimeMismatch(AmbientMismatch):
    code = "PrimeMismatch"


class NotAPrime(AdicError, ValueError):
    code = "NotAPrime"


class ZeroInGeneratorSet(AdicError, ValueError):
    code = "ZeroInGeneratorSet"


class ZeroInput(AdicError, ArithmeticError):
    code = "ZeroInput"


class ZeroDenominator(AdicError, ZeroDivisionError):
    code = "ZeroDenominator"


class ZeroFunction(AdicError, ArithmeticError):
    code = "ZeroFunction"


class ReducibleModulus(AdicError, ValueError):
    code = "ReducibleModulus"


class InvalidRadius(AdicError, ValueError):
    code = "InvalidRadius"


class UncertainTail(AdicError, ArithmeticError):
    code = "UncertainTail"


class CenterOutsideDisc(AdicError, ValueError):
    code = "CenterOutsideDisc"


class ZeroSeries(AdicError, ArithmeticError):
    code = "ZeroSeries"


class ZeroPolynomial(AdicError, ArithmeticError):
    code = "ZeroPolynomial"


class NotPolynomial(AdicError, ValueError):
    code = "NotPolynomial"


class EvaluationOfNonPolynomialAtClassicalPoint(UncertainTail):
    code = "EvaluationOfNonPolynomialAtClassicalPoint"


class PointNotInD(AdicError, ValueError):
    code = "PointNotInD"


class Gamma1NotContained(AdicError, ValueError):
    code = "Gamma1NotContained"


class NonPolynomialGenerator(AdicError, ValueError):
    code = "NonPolynomialGenerator"


class NonIntegralGenerator(AdicError, ValueError):
    code = "NonIntegralGenerator"


class NotOpenIdeal(AdicError, ValueError):
    code = "NotOpenIdeal"


class UnknownOpenness(AdicError, ValueError):
    code = "UnknownOpenness"


class EmptySampleSet(AdicError, ValueError):
    code = "EmptySampleSet"


class SampleNotIntegral(AdicError, ValueError):
    code = "SampleNotIntegral"


class ParseError(AdicError, ValueError):
    code = "ParseError"


class SchemaError(AdicError, ValueError):
    code = "SchemaError"


class ResidueDegreeTooLarge(AdicError, ValueError):
    code = "ResidueDegreeTooLarge"
