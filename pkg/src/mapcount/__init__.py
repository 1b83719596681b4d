"""Exact counts of 2nu-valent maps on surfaces of fixed genus."""
from .coefficients import Family, LaurentVector, ModelSpec, export_vector, import_vector, load_builtin
from .census import census
from .four_valent import count_contraction, derive_closed_form
from .hypergeometric import count_e1, count_e_hg, count_z_hg
from .recurrence import count_recurrence
from .series import count_series

__version__ = "0.1.0"

__all__ = [
    "Family", "LaurentVector", "ModelSpec", "census", "count_contraction", "count_e1",
    "count_e_hg", "count_recurrence", "count_series", "count_z_hg", "derive_closed_form",
    "export_vector", "import_vector", "load_builtin",
]
