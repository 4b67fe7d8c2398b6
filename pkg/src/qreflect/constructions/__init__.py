"""Constructive realizations: Miki-type K, q-Onsager currents, dressing, coaction, transfer."""

from .coaction import coaction_delta, coaction_matches_dressing, coaction_oracle, verify_coaction
from .dressing import dress_K, dressing_oracle, quantum_current, verify_dressing, verify_qcurrent
from .miki import miki_identification, miki_K, verify_miki_extension, verify_miki_scalar_RE
from .onsager import (
    OnsagerParams,
    UVar,
    miki_onsager_crosscheck,
    onsager_currents,
    onsager_relations,
    verify_onsager_realization,
)
from .transfer import transfer_commutator, transfer_function

__all__ = [
    "coaction_delta",
    "coaction_matches_dressing",
    "coaction_oracle",
    "verify_coaction",
    "dress_K",
    "dressing_oracle",
    "quantum_current",
    "verify_dressing",
    "verify_qcurrent",
    "miki_identification",
    "miki_K",
    "verify_miki_extension",
    "verify_miki_scalar_RE",
    "OnsagerParams",
    "UVar",
    "miki_onsager_crosscheck",
    "onsager_currents",
    "onsager_relations",
    "verify_onsager_realization",
    "transfer_commutator",
    "transfer_function",
]
