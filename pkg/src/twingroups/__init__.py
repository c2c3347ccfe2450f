"""Exact computations in the twin groups T_n."""
from .words import (
    IDENTITY,
    GroupContext,
    TwinGroupError,
    Word,
    WordSyntaxError,
    equal,
    eta,
    format_word,
    invert,
    length,
    normal_form,
    parse_word,
    reduce,
)
from .conjugacy import (
    CyclicReduction,
    are_conjugate,
    conjugacy_key,
    conjugacy_minimal_length,
    cyclically_reduce,
    is_cyclically_reduced,
)
from .symmetric import Permutation, is_pure, permutation_image

__version__ = "0.1.0"
