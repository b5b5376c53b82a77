import numpy as np

from gtilde.geometry import PointGn, phi_supnorm, pi_hat
from gtilde.linalg import Mat2


def random_feasible(
    rng: np.random.Generator, n: int, j: int | None = None
) -> tuple[PointGn, complex, int]:
    """A target in J_n, a pair index and a node satisfying every hypothesis.

    Without `j` the pair is drawn from ``1 ... n // 2``, middle pair included.
    """
    a = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    a = 0.6 * a / np.linalg.norm(a, 2)
    if abs(a[0, 0]) < abs(a[1, 1]):
        a[0, 0], a[1, 1] = a[1, 1], a[0, 0]
    y = pi_hat(Mat2.from_array(a), n)
    if j is None:
        j = int(rng.integers(1, n // 2 + 1))
    bound = phi_supnorm(j, y)
    radius = bound + (1 - bound) * rng.uniform(0.1, 0.9)
    return y, complex(radius * np.exp(2j * np.pi * rng.uniform())), j
