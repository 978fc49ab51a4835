"""Hilbert functions and annihilators of CW-Nagata polynomials.

``f = sum_r x_r^d1 * g_r`` with distinct u-monomials ``g_r`` of degree
``d2 >= 2`` determines the Artinian Gorenstein algebra ``A = T/Ann(f)``.
This package computes its bigraded Hilbert table from face counts of the
divisor-closed family generated by the ``g_r``, writes down generators of
``Ann(f)``, and checks both against exact catalecticant ranks.
"""

from .annihilator import GeneratorSet, build_generators, minimalize, verify_annihilation
from .faces import (
    FaceModel,
    NagataInput,
    ValidationError,
    build_face_model,
    export_hasse_dot,
    minimal_nondivisors_per_facet,
    minimal_nonfaces,
    pair_cofactors,
)
from .hilbert import BigradedTable, basis_of, bigraded_table, hilbert_vector
from .lefschetz import LinearForm, check_slp, check_wlp, hessian_rank, multiplication_rank
from .monomials import BiMonomial, PairingAction
from .oracle import catalecticant, ideal_span_dimension, oracle_bigraded_table, rank_and_kernel
from .parsing import parse, to_expression, to_json_document

__version__ = "0.1.0"
