from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any

from gtilde._errors import DuplicateNodes, NodeNotInBall, OutsideDisc
from gtilde.geometry import PointGn, pi_hat, schwarz_bound
from gtilde.linalg import Mat2
from gtilde.utils import encode_complex, resolve

from ._mu import mu_diag

if TYPE_CHECKING:
    from collections.abc import Sequence

    from gtilde.utils import Tolerances


@dataclass(frozen=True)
class PickReport:
    """Interpolation data induced in J_n by a structured Pick problem.

    ``schwarz_bound`` and ``necessary`` are only filled in for two nodes, one
    of them sending 0 to the zero matrix; ``necessary = False`` certifies
    that no analytic ``F`` with ``mu(F) < 1`` meets the nodes.
    """

    n: int
    data: tuple[tuple[complex, PointGn], ...]
    mu_values: tuple[float, ...]
    schwarz_bound: float | None = None
    argmax_j: int | None = None
    necessary: bool | None = None
    notes: tuple[str, ...] = field(default=())

    def to_json(self) -> dict[str, Any]:
        return {
            "kind": "pick",
            "n": self.n,
            "data": [
                {"lam": encode_complex(lam), "y": y.to_json()} for lam, y in self.data
            ],
            "mu_values": list(self.mu_values),
            "schwarz_bound": self.schwarz_bound,
            "argmax_j": self.argmax_j,
            "necessary": self.necessary,
            "notes": list(self.notes),
        }


def structured_np_necessary(
    nodes: Sequence[tuple[complex, Mat2]], n: int, tol: Tolerances | None = None
) -> PickReport:
    """Necessary condition for ``F`` analytic with ``mu(F) < 1`` and ``F(l_i) = B_i``.

    Any such ``F`` composes with ``pi_hat`` to an analytic map into J_n through
    ``(l_i, pi_hat(B_i))``.  With two nodes and ``F(0) = 0`` the Schwarz
    bound ``max_j phi_supnorm(j, pi_hat(B)) <= |l|`` must therefore hold.

    Raises
    ------
    OutsideDisc
        If a node is outside the open disc.
    NodeNotInBall
        If some ``mu(B_i) >= 1``.
    DuplicateNodes
        If two nodes coincide.
    """
    tol = resolve(tol)
    lams = [complex(lam) for lam, _ in nodes]
    for lam in lams:
        if not abs(lam) < 1:
            raise OutsideDisc(f"Node {lam!r} is outside the open disc", lam=lam)
    for i, a in enumerate(lams):
        for b in lams[i + 1 :]:
            if abs(a - b) <= tol.pole:
                raise DuplicateNodes(f"Nodes {a!r} and {b!r} coincide", lam=a)
    mus = []
    for lam, B in nodes:
        value = mu_diag(B, tol).value
        if not value < 1:
            raise NodeNotInBall(
                f"mu(B) = {value!r} at node {complex(lam)!r} is not below one",
                lam=complex(lam),
                mu=value,
            )
        mus.append(value)
    data = tuple((complex(lam), pi_hat(B, n)) for lam, B in nodes)
    if len(nodes) != 2:
        return PickReport(n, data, tuple(mus))
    zero = [k for k, (lam, B) in enumerate(nodes) if lam == 0 and B == Mat2.zero()]
    if not zero:
        return PickReport(
            n, data, tuple(mus), notes=("no node sends 0 to the zero matrix",)
        )
    lam, y = data[1 - zero[0]]
    bound, arg = schwarz_bound(y)
    return PickReport(n, data, tuple(mus), bound, arg, bound <= abs(lam))
