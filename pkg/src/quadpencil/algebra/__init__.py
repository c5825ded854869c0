from .forms import BinaryForm, factor_form, homogeneous_resultant, is_squarefree, moebius_act
from .matrix import IntegerMatrix, QMatrix, det, identity, inverse, matmul, qmatrix, transpose
from .poly import UPoly, interpolate, resultant
from .rational import q, q_str
from .snf import AbelianGroup, smith_normal_form

__all__ = [
    "AbelianGroup", "BinaryForm", "IntegerMatrix", "QMatrix", "UPoly", "det", "factor_form",
    "homogeneous_resultant", "identity", "interpolate", "inverse", "is_squarefree", "matmul",
    "moebius_act", "q", "q_str", "qmatrix", "resultant", "smith_normal_form", "transpose",
]
