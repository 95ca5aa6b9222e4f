"""The curve description language and curve evaluation."""

from .curves import (
    PRESETS,
    Curve,
    CurveSample,
    CurveSpec,
    Space,
    UnitSpeedCurve,
    eval_curve,
    linspace,
    preset,
    reparametrize_unit_speed,
    validate_on_sphere,
    validate_unit_speed,
)
from .expr import Binary, Expr, Number, Unary, Variable, compile_expression, parse_expression, serialize
from .random_curves import random_spherical_curve
from .specfile import format_curve_file, load_curve_file, parse_curve_file

__all__ = [
    "PRESETS",
    "Binary",
    "Curve",
    "CurveSample",
    "CurveSpec",
    "Expr",
    "Number",
    "Space",
    "Unary",
    "UnitSpeedCurve",
    "Variable",
    "compile_expression",
    "eval_curve",
    "format_curve_file",
    "linspace",
    "load_curve_file",
    "parse_curve_file",
    "parse_expression",
    "preset",
    "random_spherical_curve",
    "reparametrize_unit_speed",
    "serialize",
    "validate_on_sphere",
    "validate_unit_speed",
]
