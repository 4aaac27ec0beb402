"""Chain complexes of cobordisms, their reduction and perturbed double complexes."""

from .chain_complex import (
    ChainComplex,
    describe,
    euler_class,
    is_valid,
    object_multiset,
    shift,
    validate,
)
from .exceptions import ComplexError, InhomogeneousDifferential, InvalidPDC, NoSuchLoop, NotAComplex
from .perturbed import (
    PerturbedDoubleComplex,
    complex_as_pdc,
    deloop_in_pdc,
    reduce_column,
    relation_failures,
    relations_hold,
    total_complex,
    validate_pdc,
    vertical_gauss_eliminate,
)
from .reduction import (
    ReductionReport,
    deloop,
    dg_reduce,
    find_invertible_entry,
    gaussian_eliminate,
    is_reduced,
    reduce_workspace,
)
from .serialization import COMPLEX_FORMAT, complex_from_document, complex_to_document
from .tensor import tensor
from .workspace import ComplexWorkspace, Key

__all__ = [
    "ChainComplex",
    "describe",
    "euler_class",
    "is_valid",
    "object_multiset",
    "shift",
    "validate",
    "ComplexError",
    "InhomogeneousDifferential",
    "InvalidPDC",
    "NoSuchLoop",
    "NotAComplex",
    "PerturbedDoubleComplex",
    "complex_as_pdc",
    "deloop_in_pdc",
    "reduce_column",
    "relation_failures",
    "relations_hold",
    "total_complex",
    "validate_pdc",
    "vertical_gauss_eliminate",
    "ReductionReport",
    "deloop",
    "dg_reduce",
    "find_invertible_entry",
    "gaussian_eliminate",
    "is_reduced",
    "reduce_workspace",
    "COMPLEX_FORMAT",
    "complex_from_document",
    "complex_to_document",
    "tensor",
    "ComplexWorkspace",
    "Key",
]
