"""Process-wide knobs: the random seed and the knitting caps."""

DEFAULT_SEED = 1729
_seed = DEFAULT_SEED


def seed() -> int:
    return _seed


def set_seed(value: int) -> None:
    global _seed
    _seed = int(value)


NODE_CAP = 5000
_node_cap = NODE_CAP


def node_cap() -> int:
    """Largest AR quiver the knitting loop builds before declaring the algebra infinite."""
    return _node_cap


def set_node_cap(value: int) -> None:
    global _node_cap
    if int(value) < 1:
        raise ValueError("the node cap must be positive")
    _node_cap = int(value)
