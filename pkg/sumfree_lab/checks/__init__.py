from .cosets import (coset_profile, check_homomorphism, coset_triple_matrix,
                     check_cosine_identity, low_interval, mid_interval,
                     top_interval, edge_indices, middle_pairs)
from .ineq import (check_triple_lower_bound, check_alphal,
                   check_alphal_pair, check_Lt, large_pair_indices)
from .middle_sum import check_middle_sum, check_middle_pairing
from .regam import check_special_direction_bound, check_cosine_sum, check_sord
from .density import (check_density_theorems, check_12ml, check_lm_item1,
                      check_lm_item2, check_bgschf)
from .extremal import (ExtremalCosineProblem, minimize_weighted_cosine,
                       solve_weighted_cosine_lp, enumerate_weighted_cosine,
                       cosine_step_values, check_cosine_step_monotone)
from .subset_info import GroupTables, SubsetInfo
from .backends import check_backend_agreement

__all__ = ['coset_profile', 'check_homomorphism', 'coset_triple_matrix',
           'check_cosine_identity', 'low_interval', 'mid_interval',
           'top_interval', 'edge_indices', 'middle_pairs',
           'check_triple_lower_bound', 'check_alphal', 'check_alphal_pair',
           'check_Lt', 'large_pair_indices', 'check_middle_sum',
           'check_middle_pairing', 'check_special_direction_bound',
           'check_cosine_sum', 'check_sord', 'check_density_theorems',
           'check_12ml', 'check_lm_item1', 'check_lm_item2', 'check_bgschf',
           'ExtremalCosineProblem', 'minimize_weighted_cosine',
           'solve_weighted_cosine_lp', 'enumerate_weighted_cosine',
           'cosine_step_values', 'check_cosine_step_monotone',
           'GroupTables', 'SubsetInfo', 'check_backend_agreement']
