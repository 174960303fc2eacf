from .core import (Workspace, RelationSet, relations, S_element,
                   ideal_component, check_S_power, check_part_i)
from .hats import (HatElement, hat_trace, check_prop_hat, dim_E,
                   check_conj_c1, check_conj_c2_c3)
from .remark import NewtonPolynomial, newton_f, check_sln_remark

__all__ = [
    "Workspace", "RelationSet", "relations", "S_element", "ideal_component",
    "check_S_power", "check_part_i",
    "HatElement", "hat_trace", "check_prop_hat", "dim_E",
    "check_conj_c1", "check_conj_c2_c3",
    "NewtonPolynomial", "newton_f", "check_sln_remark",
]
