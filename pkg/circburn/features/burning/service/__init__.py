from .paths import optimal_path_cycle_burn, tile_path
from .simulation import simulate, verify_cover
from .solver import ExactBurningSolver, exact_burning_number

__all__ = [
    "ExactBurningSolver",
    "exact_burning_number",
    "optimal_path_cycle_burn",
    "simulate",
    "tile_path",
    "verify_cover",
]
