from .roots import (RootSystem, build_root_system, UnsupportedType,
                    LIE_DATA_TYPES, COMBINATORIAL_TYPES)
from .chevalley import LieAlgebraData, chevalley_data, lie_to_json_dict
from .reps import Representation, representation, UnsupportedRepresentation

__all__ = [
    "RootSystem", "build_root_system", "UnsupportedType",
    "LIE_DATA_TYPES", "COMBINATORIAL_TYPES",
    "LieAlgebraData", "chevalley_data", "lie_to_json_dict",
    "Representation", "representation", "UnsupportedRepresentation",
]
