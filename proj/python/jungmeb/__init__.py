"""Minimal enclosing spheres in 3D with Jung-bound certificates."""

try:
    from ._core import (  # noqa: F401
        Error,
        certificate,
        diameter,
        gen_points,
        oracle,
        result_json,
        solve,
        solve_certified,
        sphere_through,
    )
except ImportError:  # build-tree layout: the extension sits next to the package
    from _core import (  # type: ignore # noqa: F401
        Error,
        certificate,
        diameter,
        gen_points,
        oracle,
        result_json,
        solve,
        solve_certified,
        sphere_through,
    )

__version__ = "0.1.0"

__all__ = [
    "Error",
    "certificate",
    "diameter",
    "gen_points",
    "oracle",
    "result_json",
    "solve",
    "solve_certified",
    "sphere_through",
]
