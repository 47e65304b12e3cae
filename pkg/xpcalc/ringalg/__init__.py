from ringalg.howell import (
    howell,
    kernel,
    residue,
    in_span,
    span_intersection,
    same_span,
    rank_mod2,
    independent_row_indices,
    dual_rows,
    leading_index,
    valuation,
)

__all__ = [
    'howell', 'kernel', 'residue', 'in_span', 'span_intersection', 'same_span',
    'rank_mod2', 'independent_row_indices', 'dual_rows', 'leading_index', 'valuation',
]
