from ._circle import (
    Circle,
    bidisc_witness,
    bidisc_zero_within,
    circle_min_modulus,
    circumcircle,
    mobius_circle_image,
)
from ._code_syntax_highlight import highlight_text, use_color
from ._config import Tolerances, get_tolerances, resolve, set_tolerances, tolerances
from ._message_handler import DiagnosticsHandler, Record
from ._parallel import map_chunks
from ._serialize import (
    canonical_dumps,
    decode_complex,
    decode_complex_list,
    encode_complex,
    require,
    to_jsonable,
)
from ._util import accepts_one_positional

__all__ = [
    "Circle",
    "DiagnosticsHandler",
    "Record",
    "Tolerances",
    "accepts_one_positional",
    "bidisc_witness",
    "bidisc_zero_within",
    "canonical_dumps",
    "circle_min_modulus",
    "circumcircle",
    "decode_complex",
    "decode_complex_list",
    "encode_complex",
    "get_tolerances",
    "highlight_text",
    "map_chunks",
    "mobius_circle_image",
    "require",
    "resolve",
    "set_tolerances",
    "to_jsonable",
    "tolerances",
    "use_color",
]
