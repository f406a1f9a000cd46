"""Central simple algebras with involution in split matrix models."""

from .algebra import ORTHOGONAL, SYMPLECTIC, UNITARY, AlgebraError, AlgebraWithInvolution, Subalgebra, span_closure
from .invariants import (ChiError, QuadraticFormData, QuadraticSplit, artin_schreier_generator, c_form, cap2_form,
                         chi, chi_over_kfield, chi_poly, coefficient_forms, conjugate_cap2, quadratic_split,
                         reduced_char_poly)
from .models import (build_algebra, centralizer, corner, decode_matrix, encode_matrix, nonsplit_quadratic_constant,
                     phi, phi_algebra, phi_image, psi, psi_image, switch_algebra, switch_element, symplectic_algebra,
                     symplectic_gram, transpose_algebra, twisted_algebra, unitary_algebra)
from .serialize import (algebra_from_doc, algebra_to_doc, canonical, dumps, extend_scalars, field_embedding, loads,
                        subalgebra_from_doc, subalgebra_to_doc)
