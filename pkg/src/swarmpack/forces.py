"""Virtual forces steering the circle swarm.

Each circle receives three contributions: a separation push away from every
overlapping partner, a constant-magnitude pull that drags the swarm's
gravity center onto the container center, and a containment push toward the
container center when the circle pokes out of the current target disk. The
push terms subtract the circle's own velocity, so under repeated triggering
the velocity converges onto the push direction at v_max instead of winding
up without bound.

Contributions accumulate per circle in a fixed order (partners by ascending
index, then the gravity term, then the containment term) and the resultant
is capped at f_max, so identical states give bitwise-identical forces no
matter how the overlapping pairs were found.
"""

from __future__ import annotations

import math

import numpy as np

from .geometry import center_of_gravity
from .model import Hyperparameters, InvalidInputError, ProblemInstance, SwarmState

# A pair triggers the separation push when the centers are closer than the
# radius sum minus this slack; a circle counts as contained when its far
# edge is within this slack of the target radius. Both margins keep exact
# tangency from flapping between branches.
OVERLAP_TRIGGER_EPS = 1e-12
CONTAINMENT_EPS = 1e-12

# Below this swarm size the all-pairs sweep beats the grid's bucketing
# overhead (measured on the embedded instances, all of which sit under it).
GRID_AUTO_THRESHOLD = 1024


def find_overlap_pairs(positions, radii, method: str = "auto") -> np.ndarray:
    """Directed overlapping pairs as an (E, 2) int array sorted by (i, j).

    ``naive`` tests every pair; ``grid`` buckets circles into cells of side
    2*max(radii) and only tests the 3x3 neighborhood, which misses nothing
    because no triggering pair is farther apart than one cell side. Both
    return identical arrays; ``auto`` picks by swarm size.
    """
    p = np.asarray(positions, dtype=float)
    r = np.asarray(radii, dtype=float)
    if method == "auto":
        method = "naive" if p.shape[0] <= GRID_AUTO_THRESHOLD else "grid"
    if method == "naive":
        upper = _upper_hits_naive(p, r)
    elif method == "grid":
        upper = _upper_hits_grid(p, r)
    else:
        raise InvalidInputError(f"unknown pair-finding method {method!r}")
    return _directed_sorted(upper)


def _triggers(p, r, iu, ju):
    # One shared predicate evaluation so every method agrees bitwise.
    diff = p[ju] - p[iu]
    d = np.sqrt(diff[:, 0] ** 2 + diff[:, 1] ** 2)
    return d < r[iu] + r[ju] - OVERLAP_TRIGGER_EPS


def _upper_hits_naive(p, r):
    n = p.shape[0]
    if n < 2:
        return np.empty((0, 2), dtype=np.int64)
    iu, ju = np.triu_indices(n, k=1)
    hit = _triggers(p, r, iu, ju)
    return np.stack([iu[hit], ju[hit]], axis=1)


def _upper_hits_grid(p, r):
    n = p.shape[0]
    if n < 2:
        return np.empty((0, 2), dtype=np.int64)
    cell = 2.0 * float(np.max(r))
    coords = np.floor(p / cell).astype(np.int64)
    buckets: dict[tuple[int, int], list[int]] = {}
    for idx in range(n):
        buckets.setdefault((int(coords[idx, 0]), int(coords[idx, 1])), []).append(idx)

    cand_i: list[int] = []
    cand_j: list[int] = []
    # Forward half of the 3x3 neighborhood; together with same-cell pairs
    # this visits every unordered neighbor pair exactly once.
    forward = ((1, -1), (1, 0), (1, 1), (0, 1))
    for (cx, cy), members in buckets.items():
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                cand_i.append(members[a])
                cand_j.append(members[b])
        for ox, oy in forward:
            other = buckets.get((cx + ox, cy + oy))
            if other:
                for a in members:
                    for b in other:
                        cand_i.append(a)
                        cand_j.append(b)
    if not cand_i:
        return np.empty((0, 2), dtype=np.int64)
    raw_i = np.asarray(cand_i, dtype=np.int64)
    raw_j = np.asarray(cand_j, dtype=np.int64)
    # Normalize to i < j so the predicate sees the same operand order as
    # the all-pairs sweep.
    iu = np.minimum(raw_i, raw_j)
    ju = np.maximum(raw_i, raw_j)
    hit = _triggers(p, r, iu, ju)
    return np.stack([iu[hit], ju[hit]], axis=1)


def _directed_sorted(upper):
    if upper.shape[0] == 0:
        return np.empty((0, 2), dtype=np.int64)
    src = np.concatenate([upper[:, 0], upper[:, 1]])
    dst = np.concatenate([upper[:, 1], upper[:, 0]])
    order = np.lexsort((dst, src))
    return np.stack([src[order], dst[order]], axis=1)


def assemble_forces(
    state: SwarmState,
    instance: ProblemInstance,
    container_center,
    target_radius: float,
    hp: Hyperparameters,
    method: str = "auto",
) -> np.ndarray:
    """Capped resultant force on every circle, as an (N, 2) array."""
    p = state.positions
    v = state.velocities
    r = instance.radii
    n = p.shape[0]
    c = np.asarray(container_center, dtype=float).reshape(2)

    total = np.zeros((n, 2))

    pairs = find_overlap_pairs(p, r, method)
    if pairs.shape[0]:
        src, dst = pairs[:, 0], pairs[:, 1]
        delta = p[dst] - p[src]
        dist = np.sqrt(delta[:, 0] ** 2 + delta[:, 1] ** 2)
        push = -(delta / (dist + hp.epsilon)[:, None]) * hp.v_max - v[src]
        # np.add.at applies the rows in array order, i.e. ascending (i, j).
        np.add.at(total, src, push)

    total += _cg_force_all(p, instance.masses, hp)
    total += _radius_force_all(p, v, r, c, target_radius, hp)

    norms = np.sqrt(total[:, 0] ** 2 + total[:, 1] ** 2)
    over = norms >= hp.f_max
    if np.any(over):
        total[over] *= (hp.f_max / norms[over])[:, None]
    return total


def _cg_force_all(p, masses, hp):
    cg = center_of_gravity(p, masses)
    norm = math.sqrt(cg[0] * cg[0] + cg[1] * cg[1])
    if norm < hp.epsilon:
        return np.zeros_like(p)
    grad = (masses / masses.sum())[:, None] * (cg / norm)[None, :]
    return -hp.alpha * grad


def _radius_force_all(p, v, r, center, target_radius, hp):
    delta = center[None, :] - p
    dist = np.sqrt(delta[:, 0] ** 2 + delta[:, 1] ** 2)
    force = (delta / (dist + hp.epsilon)[:, None]) * hp.v_max - v
    inside = dist + r <= target_radius + CONTAINMENT_EPS
    force[inside] = 0.0
    return force


def overlap_force(i: int, j: int, state: SwarmState, instance: ProblemInstance, hp: Hyperparameters) -> np.ndarray:
    """Separation push on circle i from partner j; zero unless they overlap."""
    if i == j:
        raise InvalidInputError("a circle does not repel itself")
    delta = state.positions[j] - state.positions[i]
    dist = math.sqrt(delta[0] * delta[0] + delta[1] * delta[1])
    if not dist < instance.radii[i] + instance.radii[j] - OVERLAP_TRIGGER_EPS:
        return np.zeros(2)
    return -(delta / (dist + hp.epsilon)) * hp.v_max - state.velocities[i]


def cg_gradient(i: int, positions, masses, epsilon: float = 0.0) -> np.ndarray:
    """Derivative of the gravity-center distance with respect to p_i.

    The distance is m_i/sum(m) times the unit vector toward the gravity
    center; inside the epsilon ball around the origin the gradient is taken
    as zero (the distance has no derivative at its cone point).
    """
    p = np.asarray(positions, dtype=float)
    m = np.asarray(masses, dtype=float)
    cg = center_of_gravity(p, m)
    norm = math.sqrt(cg[0] * cg[0] + cg[1] * cg[1])
    if norm < epsilon or norm == 0.0:
        return np.zeros(2)
    return (m[i] / m.sum()) * (cg / norm)


def cg_force(i: int, state: SwarmState, instance: ProblemInstance, hp: Hyperparameters) -> np.ndarray:
    """Constant-magnitude pull steering the gravity center onto the origin."""
    return -hp.alpha * cg_gradient(i, state.positions, instance.masses, epsilon=hp.epsilon)


def radius_force(
    i: int,
    state: SwarmState,
    instance: ProblemInstance,
    container_center,
    target_radius: float,
    hp: Hyperparameters,
) -> np.ndarray:
    """Containment push on circle i; zero while it sits inside the target disk."""
    c = np.asarray(container_center, dtype=float).reshape(2)
    delta = c - state.positions[i]
    dist = math.sqrt(delta[0] * delta[0] + delta[1] * delta[1])
    if dist + instance.radii[i] <= target_radius + CONTAINMENT_EPS:
        return np.zeros(2)
    return (delta / (dist + hp.epsilon)) * hp.v_max - state.velocities[i]


def resultant_force(contributions, hp: Hyperparameters) -> np.ndarray:
    """Sum the contributions in the order given and cap the norm at f_max."""
    total = np.zeros(2)
    for f in contributions:
        total = total + np.asarray(f, dtype=float)
    norm = math.sqrt(total[0] * total[0] + total[1] * total[1])
    if norm >= hp.f_max:
        total = total * (hp.f_max / norm)
    return total
