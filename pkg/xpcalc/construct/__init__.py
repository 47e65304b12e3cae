from construct.toric import toric_code, toric_logical_z
from construct.construction_engine import (
    ConstructionEngine,
    REFERENCE_TABLE,
    TABLE_TARGETS,
    target_level,
)

__all__ = ['toric_code', 'toric_logical_z', 'ConstructionEngine', 'REFERENCE_TABLE', 'TABLE_TARGETS', 'target_level']
