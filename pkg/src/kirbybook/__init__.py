"""Kirby-calculus compiler from pure braided plats in L(p,1) and S^1 x S^2
to planar open books with positive monodromy."""

from .braid import (PlatInput, PureBraidWord, Syllable, parse_input, parse_word,
                    render_input, render_word, u_decomposition)
from .kirby import (LinkingMatrix, MixedDiagram, blow_down, blow_up, cancel_syllable,
                    initial_diagram, linking_matrix, meridian_zero)
from .openbook import OpenBook, euler_characteristic, extract, render_svg
from .pipeline import run, theorem1, theorem2, unknot_k
from .verify import audit, h1, round_trip, smith_normal_form

__version__ = "0.1.0"
