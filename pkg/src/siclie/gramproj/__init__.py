"""P-P^T property of Weyl-Heisenberg covariant Gram projectors."""

from .bundle import WhGramBundle, check_ppt, h_vector, wh_gram_bundle, wigner_h_relation

__all__ = ["WhGramBundle", "check_ppt", "h_vector", "wh_gram_bundle", "wigner_h_relation"]
