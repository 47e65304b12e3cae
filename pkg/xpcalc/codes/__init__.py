from codes.code_builder import (
    build_code,
    codeword_rows,
    codeword_matrix,
    canonical_codewords,
    logical_z_matrix,
    code_rank_check,
    DEFAULT_ENUMERATION_CAP,
)
from codes.code_io import parse_code, serialize_code, load_code, parse_bits, parse_pgates
from codes.distances import code_distances, DEFAULT_DISTANCE_CAP

__all__ = [
    'build_code', 'codeword_rows', 'codeword_matrix', 'canonical_codewords', 'logical_z_matrix',
    'code_rank_check', 'DEFAULT_ENUMERATION_CAP',
    'parse_code', 'serialize_code', 'load_code', 'parse_bits', 'parse_pgates',
    'code_distances', 'DEFAULT_DISTANCE_CAP',
]
