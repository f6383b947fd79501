from enum import Enum


class AugmentedEnum(Enum):
    def __hash__(self):
        return self.value.__hash__()

    def __eq__(self, other):
        if isinstance(other, type(self)) or isinstance(other, str):
            return self.value == other
        return False

    def __str__(self) -> str:
        return self.value


class Reading(AugmentedEnum):
    """
    Which displayed form of the curve-operator and torus S-matrix formulas to evaluate. The two
    forms differ in their twist-scalar prefactors.
    """
    STATEMENT = 'statement'
    PROOF = 'proof'


class Route(AugmentedEnum):
    """
    The two independent ways of computing S(λ) from genus-zero data.
    """
    MAIN = 'main'
    SANDWICH = 'sandwich'


class DecompositionTree(AugmentedEnum):
    """
    Pants decompositions used by the dimension engine.
    """
    CATERPILLAR = 'caterpillar'
    COMB = 'comb'


class Relations:
    """
    Names of the relations reported by the genus-zero suite and the torus checks.
    """

    UNIT_F = 'unit_F'
    ESS = 'ess'
    PENTAGON = 'pentagon'
    ABBA = 'abba'
    PENTSUM = 'pentsum'
    PENTAGON_CONSISTENCY = 'pentagon_consistency'
    E_NONZERO = 'E_nonzero'
    S_ROW_NONZERO = 'S_row_nonzero'
    F_INVERTIBLE = 'F_invertible'
    DAGGER_SYMMETRY = 'dagger_symmetry'
    FLIP_DIMENSION = 'flip_dimension'
    FUSION_COMMUTE = 'fusion_commute'
    CURVE_CHAIN = 'curve_chain'
    CURVE_TORUS_UNIT = 'curve_torus_unit'
    FUSION_PRODUCT = 'fusion_product'
    DEHN = 'dehn'
    CERNE = 'cerne'
    MAIN_SELF_CONSISTENCY = 'main_self_consistency'
    ROUTE_EQUIVALENCE = 'route_equivalence'
    MCG = 'mcg'
    S_INVERTIBLE = 'S_invertible'
    RECONSTRUCTION = 'reconstruction'


UNIT_LABEL = "0"
"""
Default name of the unit label when a document or generator does not declare one.
"""
DEFAULT_TOLERANCE = 1e-9
"""
Max-norm residual below which a relation is considered to hold.
"""
DEFAULT_COND_LIMIT = 1e6
"""
Largest condition number accepted for matrices that must be invertible.
"""
CORE_DEPENDENCIES = {'numpy', 'scipy', 'pandas', 'jsonschema', 'click', 'semantic_version'}
"""
The set of dependencies whose versions are logged with every machine-readable result
"""
