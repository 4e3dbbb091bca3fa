from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Tolerance:
    """Every numeric tolerance used by the library, in one place.

    ``length`` is in unit-disc coordinates, ``angle`` in radians. ``area``
    bounds the coverage defect of a tiling and ``hausdorff`` the matched
    boundary distance used when comparing tile sets.
    """

    length: float = 1e-9
    angle: float = 1e-9
    area: float = 1e-7
    hausdorff: float = 1e-7

    def with_eps(self, eps: float) -> "Tolerance":
        """Override the length and angle tolerances with a single value."""
        if not eps > 0:
            raise ValueError(f"eps must be positive, got {eps!r}")
        return replace(self, length=eps, angle=eps)


DEFAULT_TOL = Tolerance()
