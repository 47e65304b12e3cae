from noncss.noncss_engine import NonCssEngine, css_as_pauli
from noncss.stab_io import parse_stabilisers, serialize_stabilisers, load_stabilisers

__all__ = ['NonCssEngine', 'css_as_pauli', 'parse_stabilisers', 'serialize_stabilisers', 'load_stabilisers']
