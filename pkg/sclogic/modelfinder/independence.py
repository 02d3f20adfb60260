import logging
import multiprocessing
import os

from ..congruences import get_axiom_set
from ..sclogic_error import SearchExhausted
from .config import SearchConfig
from .search import find_model

logger = logging.getLogger(__name__)

INDEPENDENT = "independent"
NO_MODEL = "no-model"
INCONCLUSIVE = "inconclusive"


class AxiomResult(object):
    """Outcome of searching a model of the other axioms that refutes one axiom."""

    def __init__(self, name, status, counter_example=None, completed=(), message=""):
        self.name = name
        self.status = status
        self.counter_example = counter_example
        self.completed = tuple(completed)
        self.message = message

    @property
    def size(self):
        if self.counter_example is None:
            return None
        return self.counter_example.algebra.size

    def __str__(self):
        if self.status == INDEPENDENT:
            return "%s: independent, counter-model of size %d" % (self.name, self.size)
        if self.status == NO_MODEL:
            return "%s: no counter-model up to size %d" % (self.name, max(self.completed))
        return "%s: inconclusive, %s" % (self.name, self.message)


class IndependenceReport(object):
    def __init__(self, axiom_set, config, results):
        self.axiom_set = axiom_set
        self.config = config
        self.results = list(results)

    def independent(self):
        return all(r.status == INDEPENDENT for r in self.results)

    def inconclusive(self):
        return [r for r in self.results if r.status == INCONCLUSIVE]

    def sizes(self):
        return {r.name: r.size for r in self.results if r.status == INDEPENDENT}

    def __str__(self):
        verdict = "independent" if self.independent() else "not shown independent"
        lines = ["'%s': %s" % (self.axiom_set.name, verdict)]
        for r in self.results:
            lines.append("\t" + str(r))
            if r.counter_example is not None:
                lines.extend("\t\t" + line for line in r.counter_example.format().splitlines())
        return "\n".join(lines)


def check_axiom(axiom_set, name, cfg):
    goal = axiom_set[name]
    try:
        found = find_model(axiom_set.without(name), goal, cfg)
    except SearchExhausted as e:
        return AxiomResult(name, INCONCLUSIVE, completed=e.completed, message=e.message)
    if found is None:
        return AxiomResult(name, NO_MODEL, completed=range(1, cfg.max_size + 1))
    return AxiomResult(name, INDEPENDENT, found, completed=range(1, found.algebra.size))


def independence_report(axioms, cfg=None, cpus=1):
    """
    For each axiom, search a model of the remaining ones that refutes it.

    ``axioms`` is an `AxiomSet` or a registered name. With ``cpus > 1`` the
    searches run in a process pool; results keep the order of the set.
    """
    if isinstance(axioms, str):
        axioms = get_axiom_set(axioms)
    cfg = cfg or SearchConfig()
    if cpus <= 1:
        results = [check_axiom(axioms, name, cfg) for name in axioms.names]
    else:
        with multiprocessing.Pool(processes=cpus) as pool:
            res = [pool.apply_async(check_axiom, (axioms, name, cfg)) for name in axioms.names]
            results = [r.get() for r in res]
    for r in results:
        logger.info("%s", r)
    return IndependenceReport(axioms, cfg, results)


def load_sizes(path):
    import yaml

    if not os.path.exists(path):
        return {}
    with open(path, encoding="utf-8") as f:
        return yaml.safe_load(f) or {}


def record_sizes(report, path):
    """Store the counter-model sizes of ``report`` under its set name in the YAML file ``path``."""
    import yaml

    data = load_sizes(path)
    data[report.axiom_set.name] = report.sizes()
    with open(path, "w", encoding="utf-8") as f:
        yaml.safe_dump(data, f, sort_keys=False, default_flow_style=False)
    return data
