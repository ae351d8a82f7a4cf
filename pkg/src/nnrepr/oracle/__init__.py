"""Ground-truth verification"""

from .bounds import component_bound_check
from .equiv import EquivReport, equiv_check, equiv_check_async
from .four_square import four_square
from .search import SEARCH_MAX_ARITY, SearchResult, hamming_matrix, min_hnn_search, search_key, unrank

__all__ = [
    'EquivReport',
    'equiv_check',
    'equiv_check_async',
    'SearchResult',
    'min_hnn_search',
    'hamming_matrix',
    'unrank',
    'search_key',
    'SEARCH_MAX_ARITY',
    'component_bound_check',
    'four_square',
]
