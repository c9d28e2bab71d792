import os
import json

# default caps on the rank and on tr(weight) per rank
DEFAULT_MAX_RANK = 4
DEFAULT_WEIGHT_CAPS = {1: 12, 2: 8, 3: 6, 4: 4}


class PreconditionError(ValueError):
    pass


class CapacityError(ValueError):
    pass


class InvariantViolation(AssertionError):
    pass


def check_rank(rank, max_rank=DEFAULT_MAX_RANK):
    # Raise if the rank is outside the supported range
    # Input: rank - rank n of the root system A_n
    #        max_rank - configured cap
    # Output: None
    if rank < 1:
        raise PreconditionError("Rank must be at least 1, got {}".format(rank))
    if rank > max_rank:
        raise CapacityError("Rank {} exceeds the configured cap {}".format(rank, max_rank))


def weight_cap(rank, weight_caps=None):
    caps = DEFAULT_WEIGHT_CAPS if weight_caps is None else weight_caps
    caps = {int(k): int(v) for k, v in caps.items()}
    if rank not in caps:
        raise CapacityError("No weight cap configured for rank {}".format(rank))
    return caps[rank]


def check_weight(rank, weight, weight_caps=None):
    # Raise if tr(weight) is above the cap for this rank
    # Input: rank - rank n
    #        weight - tuple of n nonnegative integers over the simple roots
    #        weight_caps - dict rank -> max tr, defaults to DEFAULT_WEIGHT_CAPS
    # Output: None
    assert len(weight) == rank, "Weight {} does not have {} coordinates".format(weight, rank)
    if any(c < 0 for c in weight):
        raise PreconditionError("Weight {} has a negative coordinate".format(weight))
    cap = weight_cap(rank, weight_caps)
    if sum(weight) > cap:
        raise CapacityError("Weight {} has tr {} above the cap {} for rank {}".format(weight, sum(weight), cap, rank))


def parse_word(text):
    # Parse "1,2,1" into (1, 2, 1)
    text = text.strip()
    if text.startswith("(") or text.startswith("["):
        text = text[1:-1]
    if not text:
        return tuple()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise PreconditionError("Cannot parse {!r} as a comma separated list of integers".format(text))


def canonical_json(payload):
    # Stable JSON text used for digests
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def ensure_dir(path):
    if not os.path.exists(path):
        os.makedirs(path, exist_ok=True)
    return path

