"""
Algebra Module

Square-free edge algebra and its tree quotient, vertex generators, exact span
bases and Hilbert series.
"""

from .squarefree import AlgebraElement, Ambient, AmbientKind, mul, phi
from .unipoly import UniPoly
from .generators import (
    GeneratorKind, coeff_c, gen_f, gen_X, gen_Y, gen_Y_tilde, vertex_family,
)
from .span import SpanBasis
from .hilbert import (
    algebra_series, filtered_run, filtered_series, generic_series, graded_series,
    majorize, span_contains,
)

__all__ = [
    'AlgebraElement', 'Ambient', 'AmbientKind', 'mul', 'phi',
    'UniPoly',
    'GeneratorKind', 'coeff_c', 'gen_f', 'gen_X', 'gen_Y', 'gen_Y_tilde', 'vertex_family',
    'SpanBasis',
    'algebra_series', 'filtered_run', 'filtered_series', 'generic_series', 'graded_series',
    'majorize', 'span_contains',
]
