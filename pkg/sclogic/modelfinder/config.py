from dataclasses import dataclass


@dataclass(frozen=True)
class SearchConfig:
    """
    Limits of one model search.

    `max_size` is the largest domain tried, `budget` the number of cell
    assignments allowed per domain size and `deadline` the wall-clock limit
    in seconds for one goal across all sizes.
    """

    max_size: int = 4
    budget: int = 2_000_000
    deadline: float = 60.0
    symmetry_breaking: bool = True

    def __post_init__(self):
        if self.max_size < 2:
            raise ValueError("max_size must be at least 2, got %r" % (self.max_size,))
        if self.budget <= 0:
            raise ValueError("budget must be positive, got %r" % (self.budget,))
        if self.deadline <= 0:
            raise ValueError("deadline must be positive, got %r" % (self.deadline,))
