"""Neat subalgebras: etale tests, idempotents, constructions and certificates."""

from .constructions import (ConstructionError, SquareSeparable, extend_neat_quadratic, find_c1c3_zero, max_etale,
                            neat_biquadratic, neat_quadratic_field, square_separable_search, stable_quaternion_cap2,
                            triquadratic_split, verify_multiquadratic)
from .etale import (EtaleDescription, EtaleError, all_idempotents, all_idempotents_brute, has_nonzero_nilpotent,
                    idempotents, is_etale, is_field, min_poly, primitive_element, primitive_idempotents,
                    trace_form_nondegenerate)
from .frames import FrameError, frame, split_neat
from .neat import BAD_IDEMPOTENT, NOT_ETALE, NOT_FREE, NOT_IN_SYMM, NeatVerdict, NotFound, is_neat, search_space
from .springer import PlantedInstance, SpringerError, irreducible_quadratic, plant, springer_descent
