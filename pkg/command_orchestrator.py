import json
import logging
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Any, Optional, Union

import chromatic_complex
from bigraded_groups import BigradedGroups
from chromatic_polynomial import chromatic_polynomial
from cochromatic_distinguisher import distinguish
from diagram_generator import fixture, pretzel_diagram, rational_diagram, torus_diagram
from experiment_runner import ExperimentOptions, run_experiments
from graph_builder import build
from graph_invariants import component_invariants
from homology_cache_manager import HomologyCacheManager, diagram_instance_key, graph_instance_key
from khovanov_complex import khovanov_homology
from link_diagram import LinkDiagram, parse_pd
from run_config import RunConfig
from simple_graph import SimpleGraph, parse_graph
from table_renderer import render, reproduce
from theorem_verifier import VerifyOptions, verify

logger = logging.getLogger(__name__)


@dataclass
class CommandResult:
    """Rendered output of one command; `ok` is False on a verification mismatch."""
    text: str
    ok: bool = True


def _dump(payload: Any) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


class CommandOrchestrator:
    """
    Runs one subcommand described by a validated RunConfig.
    """

    def __init__(self, config: RunConfig):
        self.config = config
        self.cache_manager: Optional[HomologyCacheManager] = (
            HomologyCacheManager(config.cache_dir) if config.cache_dir else None
        )
        logger.info(f"Initialized CommandOrchestrator for '{config.command}' with {config.workers} worker(s).")

    def run(self) -> CommandResult:
        if self.cache_manager:
            self.cache_manager.load()
        try:
            logger.info(f"--- Starting {self.config.command} ---")
            handler = getattr(self, f"run_{self.config.command}")
            result = handler()
            logger.info(f"--- {self.config.command} Complete (ok={result.ok}) ---")
            return result
        finally:
            # Ensure the cache is saved even if an error occurs
            if self.cache_manager:
                logger.info(f"Cache hits: {self.cache_manager.hits}, misses: {self.cache_manager.misses}")
                self.cache_manager.save()

    # --- Inputs ---

    def load_input(self) -> Union[SimpleGraph, LinkDiagram]:
        cfg = self.config
        if cfg.graph_file:
            return parse_graph(Path(cfg.graph_file).read_text(encoding="utf-8"))
        if cfg.dsl:
            return build(cfg.dsl)
        if cfg.pd_file:
            path = Path(cfg.pd_file)
            return parse_pd(path.read_text(encoding="utf-8"), path.stem)
        if cfg.knot:
            return fixture(cfg.knot.replace("-", "_"))
        if cfg.pretzel:
            return pretzel_diagram(*cfg.pretzel)
        if cfg.torus:
            return torus_diagram(2, cfg.torus)
        return rational_diagram(*cfg.rational)

    def _cached(self, key: str, compute) -> BigradedGroups:
        if self.cache_manager:
            found = self.cache_manager.get(key)
            if found is not None:
                logger.info(f"Cache hit for {key}")
                return found
        groups = compute()
        if self.cache_manager:
            self.cache_manager.put(key, groups)
        return groups

    # --- Commands ---

    def run_compute(self) -> CommandResult:
        source = self.load_input()
        if isinstance(source, LinkDiagram):
            return self._compute_khovanov(source)
        return self._compute_chromatic(source)

    def _compute_chromatic(self, graph: SimpleGraph) -> CommandResult:
        cfg = self.config
        key = graph_instance_key(graph, cfg.m, cfg.degrees, cfg.quantum)
        h = self._cached(key, lambda: chromatic_complex.homology(
            graph, cfg.m, cfg.degrees, cfg.quantum, max_edges=cfg.max_edges,
            num_workers=cfg.workers, show_progress=cfg.show_progress,
        ))
        invariants = [asdict(inv) for inv in component_invariants(graph)]
        if cfg.json_output:
            return CommandResult(_dump({"graph": graph.key(), "m": cfg.m, "invariants": invariants,
                                        "chromatic_polynomial": chromatic_polynomial(graph).to_json(),
                                        "homology": h.to_json()}))
        title = f"H_A{cfg.m}({cfg.dsl or cfg.graph_file}), v={graph.vertex_count}, E={graph.edge_count}"
        return CommandResult(render(h, title))

    def _compute_khovanov(self, diagram: LinkDiagram) -> CommandResult:
        cfg = self.config
        key = diagram_instance_key(diagram, cfg.degrees, cfg.quantum)
        kh = self._cached(key, lambda: khovanov_homology(
            diagram, cfg.degrees, cfg.quantum, max_crossings=cfg.max_crossings,
            num_workers=cfg.workers, show_progress=cfg.show_progress,
        ))
        torsion = {}
        if kh.torsion_degrees():
            low, high = kh.degrees()[0], kh.degrees()[-1]
            torsion = dict(zip(range(low, high + 1), kh.torsion_sequence(low, high, 2)))
        if cfg.json_output:
            return CommandResult(_dump({"diagram": diagram.to_json(), "c_plus": diagram.c_plus,
                                        "c_minus": diagram.c_minus, "homology": kh.to_json(),
                                        "z2_torsion_by_p": {str(p): x for p, x in torsion.items()}}))
        title = f"Kh({diagram.name or 'diagram'}), n={diagram.crossing_count}, c+={diagram.c_plus}, c-={diagram.c_minus}"
        text = render(kh, title)
        if torsion:
            text += "Z_2 torsion by p: " + " ".join(f"{p}:{x}" for p, x in torsion.items()) + "\n"
        return CommandResult(text)

    def run_verify(self) -> CommandResult:
        cfg = self.config
        options = VerifyOptions(
            max_v=cfg.max_v, sample_v=cfg.sample_v, sample_size=cfg.sample_size, seed=cfg.seed,
            s_range=cfg.s_range, t_range=cfg.t_range, n_range=cfg.n_range, m_values=cfg.m_values,
            pretzel=cfg.pretzel, workers=cfg.workers, show_progress=cfg.show_progress,
        )
        report = verify(cfg.theorems, options)
        if report.failures():
            logger.warning(f"{len(report.failures())} of {len(report.verdicts)} instances disagree")
        if cfg.json_output:
            return CommandResult(_dump(report.to_json()), report.passed)
        lines = []
        for verdict in report.verdicts:
            status = "PASS" if verdict.match else "FAIL"
            lines.append(f"{status} {verdict.theorem} {verdict.instance}")
            if not verdict.match:
                lines.append(f"     closed form: {json.dumps(verdict.closed_form, sort_keys=True)}")
                lines.append(f"     oracle:      {json.dumps(verdict.oracle, sort_keys=True)}")
        lines.append(f"{len(report.verdicts) - len(report.failures())}/{len(report.verdicts)} instances agree")
        return CommandResult("\n".join(lines) + "\n", report.passed)

    def run_distinguish(self) -> CommandResult:
        cfg = self.config
        report = distinguish(cfg.vertex_count, cfg.m, workers=cfg.workers, show_progress=cfg.show_progress)
        if cfg.json_output:
            return CommandResult(_dump(report.to_json()))
        lines = [f"v={report.vertex_count}, A_{report.m}: {len(report.split_classes())} of "
                 f"{len(report.classes)} cochromatic classes split"]
        for cls in report.split_classes():
            lines.append(f"P = {cls.polynomial}: differs at {', '.join(cls.separating_gradings())}")
            for member in cls.members:
                groups = ", ".join(f"{g}={member.groups.get(g, '0')}" for g in cls.separating_gradings())
                lines.append(f"  {member.graph.key()}: {groups}")
        for target, found in report.targets_found.items():
            lines.append(f"target {target}: {'split' if found else 'not split'}")
        return CommandResult("\n".join(lines) + "\n")

    def run_table(self) -> CommandResult:
        cfg = self.config
        kwargs = {"num_workers": cfg.workers}
        if cfg.table == 1:
            kwargs.update(count=cfg.count, show_progress=cfg.show_progress)
        elif cfg.table == 2:
            kwargs.update(brute_force=cfg.brute_force)
        result = reproduce(cfg.table, **kwargs)
        ok = result.matches is not False
        if cfg.json_output:
            return CommandResult(_dump(result.to_json()), ok)
        status = {True: "matches", False: "DOES NOT MATCH", None: "not compared"}[result.matches]
        text = result.text + f"Table {cfg.table} {status} the reference values; [..] marks the agreeing range.\n"
        for line in result.details.get("mismatches", []):
            text += f"  {line}\n"
        return CommandResult(text, ok)

    def run_experiment(self) -> CommandResult:
        cfg = self.config
        options = ExperimentOptions(max_v=cfg.max_v, m_values=cfg.m_values, workers=cfg.workers,
                                    show_progress=cfg.show_progress)
        observations = run_experiments(cfg.experiments, options)
        payload = [observation.to_json() for observation in observations]
        if cfg.json_output:
            return CommandResult(_dump(payload))
        return CommandResult("".join(json.dumps(entry, sort_keys=True) + "\n" for entry in payload))
