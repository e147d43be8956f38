"""Random conflict models for property tests and experiments."""
from __future__ import annotations

import numpy as np

from .model import (
    ConflictModel,
    DecisionMaker,
    Logic,
    OptionDef,
    PreferenceOrder,
    Reversibility,
    StateSpace,
    enumerate_states,
)
from .reachability import MovePolicy, PolicyKind


def random_model(
    seed,
    policy: PolicyKind | None = None,
    logic: Logic | None = None,
    dms=(2, 3),
    options_per_dm=(1, 2),
    max_states: int = 16,
    arc_density: float = 0.3,
) -> ConflictModel:
    """A valid model with random options, state subset, arcs and weak orders."""
    rng = np.random.default_rng(seed)
    n_dm = int(rng.integers(dms[0], dms[1] + 1))
    logic = logic or Logic(rng.choice([l.value for l in Logic]))
    policy = policy or PolicyKind(rng.choice([k.value for k in PolicyKind]))
    kinds = list(Reversibility)

    options = []
    for d in range(1, n_dm + 1):
        for j in range(int(rng.integers(options_per_dm[0], options_per_dm[1] + 1))):
            rev = kinds[int(rng.integers(len(kinds)))]
            options.append(OptionDef.make(f"o{d}{j + 1}", d, f"option {j + 1} of DM{d}", rev))

    full = enumerate_states(options, logic).assignments
    size = int(rng.integers(2, min(len(full), max_states) + 1))
    picked = sorted(rng.choice(len(full), size=size, replace=False))
    space = StateSpace.from_assignments(full[k] for k in picked)

    adjacency = {}
    if policy is PolicyKind.EXPLICIT:
        for d in range(1, n_dm + 1):
            arcs = rng.random((size, size)) < arc_density
            np.fill_diagonal(arcs, False)
            adjacency[d] = {s + 1: {int(t) + 1 for t in np.flatnonzero(arcs[s])} for s in range(size)}

    prefs = []
    for d in range(1, n_dm + 1):
        levels = int(rng.integers(1, size + 1))
        scores = {s: int(rng.integers(levels)) for s in space.ids}
        prefs.append(PreferenceOrder.from_scores(d, scores))

    dm_list = tuple(DecisionMaker(d, f"DM{d}") for d in range(1, n_dm + 1))
    return ConflictModel(dm_list, tuple(options), logic, space, tuple(prefs),
                         MovePolicy(policy, adjacency))
