from dataclasses import dataclass
from typing import Callable, Optional

# stream id of the randomness used by summaries, out of reach of replica ids
SUMMARY_STREAM = 2 ** 63


@dataclass(frozen=True)
class Experiment:
    """ A named experiment: ``replica(config, stream, index)`` returns the records of one replica, grouped by record
    type; ``summarize(config, records)`` folds all records into (aggregates, passed); ``validate(config)`` checks
    constraints across keys before anything runs. """
    name: str
    replica: Callable
    summarize: Callable
    validate: Optional[Callable] = None
