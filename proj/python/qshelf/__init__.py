"""Exact q-series verification of shelf identities."""

from ._qshelf import (
    DivergentProduct,
    IdentityMismatch,
    InsufficientPrecision,
    LowestCoefficientNotUnit,
    NegativeExponentResidue,
    QSeriesError,
    Series,
    StabilizationFailure,
    UsageError,
    ZeroSeries,
    assert_ordinary,
    closed_form,
    emit_series,
    f_series,
    genfun,
    h_infinity,
    invert_unit,
    j_specialized,
    partitions,
    pochhammer,
    product,
    run_suite,
    shelves,
    shift,
)

__all__ = [
    "DivergentProduct",
    "IdentityMismatch",
    "InsufficientPrecision",
    "LowestCoefficientNotUnit",
    "NegativeExponentResidue",
    "QSeriesError",
    "Series",
    "StabilizationFailure",
    "UsageError",
    "ZeroSeries",
    "assert_ordinary",
    "closed_form",
    "emit_series",
    "f_series",
    "genfun",
    "h_infinity",
    "invert_unit",
    "j_specialized",
    "partitions",
    "pochhammer",
    "product",
    "run_suite",
    "shelves",
    "shift",
]
