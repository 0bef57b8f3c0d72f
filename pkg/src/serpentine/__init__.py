"""Serpentine tableaux, two-row Kostka-Foulkes characters, fusion filtrations
and the free-boson Fock space, all in exact arithmetic."""

from .errors import InvalidArgument, VerificationFailure
from .fusion import (EvalModule, GradedMultiplicities, build_eval_module, filtration_dims,
                     graded_multiplicities, verify_kedem)
from .linalg import RMatrix, SpanBasis, block_restrict, rank, rank_mod_p, span_extend
from .qpoly import QPoly, partition_series, q_binomial
from .report import Check, Report
from .symfun import (Partition, SymFun, hall_inner_product, inner_product, kedem_transform,
                     kostka_foulkes_standard, kostka_number, maj_qcharacter, partitions,
                     schur_expansion, schur_to_p)
from .tableaux import (SerpentineTableau, TwoRowTableau, charge, descent_set, embed_iN,
                       enumerate_serpentine, enumerate_two_row_tableaux, maj, principal,
                       principal_tableau, serpentine_level_set, stable_major_index)
from .virasoro import FockState, L_apply, charge_apply, h_apply
from .vertex import MultiLaurent, e_mode_apply, e_monomial_oracle, gamma_minus_series

__all__ = [
    "InvalidArgument", "VerificationFailure",
    "EvalModule", "GradedMultiplicities", "build_eval_module", "filtration_dims",
    "graded_multiplicities", "verify_kedem",
    "RMatrix", "SpanBasis", "block_restrict", "rank", "rank_mod_p", "span_extend",
    "QPoly", "partition_series", "q_binomial",
    "Check", "Report",
    "Partition", "SymFun", "hall_inner_product", "inner_product", "kedem_transform",
    "kostka_foulkes_standard", "kostka_number", "maj_qcharacter", "partitions",
    "schur_expansion", "schur_to_p",
    "SerpentineTableau", "TwoRowTableau", "charge", "descent_set", "embed_iN",
    "enumerate_serpentine", "enumerate_two_row_tableaux", "maj", "principal",
    "principal_tableau", "serpentine_level_set", "stable_major_index",
    "FockState", "L_apply", "charge_apply", "h_apply",
    "MultiLaurent", "e_mode_apply", "e_monomial_oracle", "gamma_minus_series",
]
