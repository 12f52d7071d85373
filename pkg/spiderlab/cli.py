"""
Command line interface: ``spiderlab <command> --config spider.json``.

Reports are JSON documents written to ``--output`` or stdout. Exit status is 0 on
success, 2 when the spider definition can't be read and 3 on other spiderlab errors.
"""

import argparse
import logging
import sys
import typing

from . import __version__
from .charges import equilibria, robust_domain, trapping_domain
from .control import coulomb_charges_for, gradient_flow, hooke_weights_for
from .cspace import lift_census
from .definitions import SpiderSpec
from .exceptions import SpiderDefinitionError, SpiderlabError
from .geom import Point
from .io import (
    census_report,
    control_report,
    cspace_report,
    dumps,
    error_report,
    file_spider,
    render_svg,
    to_builtin,
    trajectory_rows,
    workspace_report,
    write_csv,
    write_json,
    write_text,
)
from .morse import census
from .potentials import ChargeTriple, CoulombPotential, HookePotential, Potential
from .presets import PRESETS
from .workspace import build_workspace

logger = logging.getLogger(__name__)

EXIT_DEFINITION = 2
EXIT_DOMAIN = 3


def _load_spider(args) -> SpiderSpec:
    if args.preset:
        return PRESETS[args.preset]
    return file_spider(args.config)


def _potential(spec: SpiderSpec, kind: str) -> Potential:
    if kind == "hooke":
        return HookePotential(spec.feet)
    if kind == "weighted":
        if spec.weights is None:
            raise SpiderDefinitionError(
                "The weighted potential needs 'weights' in the spider definition.",
                "weights",
            )
        return HookePotential(spec.feet, spec.weights)
    if spec.charges is None:
        raise SpiderDefinitionError(
            "The coulomb potential needs 'charges' in the spider definition.",
            "charges",
        )
    return CoulombPotential(spec.feet, spec.charges)


def _emit(args, report):
    if args.output:
        write_json(args.output, report)
    else:
        sys.stdout.write(dumps(report))


def cmd_workspace(args, spec):
    w = build_workspace(spec)
    if args.svg:
        _write_svg(args.svg, w)
    return workspace_report(w)


def cmd_census(args, spec):
    w = build_workspace(spec)
    return census_report(census(_potential(spec, args.potential), w), args.potential)


def cmd_cspace(args, spec):
    w = build_workspace(spec)
    lifted = lift_census(census(_potential(spec, args.potential), w), w)
    return cspace_report(lifted, w)


def cmd_trap(args, spec):
    if args.domain == "robust":
        region = robust_domain(spec, args.resolution)
    else:
        region = trapping_domain(spec.feet, args.resolution)
    if args.csv:
        write_csv(args.csv, ("x", "y"), region.sample)
    if args.svg:
        w = build_workspace(spec, allow_empty=True)
        _write_svg(args.svg, w, region)
    return {
        "domain": args.domain,
        "empty": region.is_empty,
        "count": len(region.sample),
        "resolution": region.resolution,
        "bounds": region.bounds,
    }


def cmd_control(args, spec):
    if args.mode == "hooke":
        solution = hooke_weights_for(Point(*args.target), spec.feet)
    else:
        solution = coulomb_charges_for(Point(*args.target), spec)
    return control_report(solution)


def cmd_flow(args, spec):
    w = build_workspace(spec)
    potential = _potential(spec, args.potential)
    start = Point(*args.start)
    trajectory = gradient_flow(potential, start, w, max_steps=args.max_steps)
    if args.csv:
        write_csv(args.csv, ("x", "y", "value", "tag"), trajectory_rows(trajectory))
    if args.svg:
        _write_svg(args.svg, w, trajectory)
    return {
        "start": start,
        "terminal": trajectory.terminal,
        "steps": len(trajectory.points) - 1,
        "phases": trajectory.phases,
        "segments": trajectory.segments,
        "value": trajectory.values[-1],
    }


def cmd_equilibria(args, spec):
    charges = spec.charges
    if charges is None:
        charges = ChargeTriple(1.0, 1.0, 1.0)
    found = equilibria(spec.feet, charges)
    return {
        "charges": charges.as_array().tolist(),
        "count": len(found),
        "equilibria": to_builtin(found),
    }


def _write_svg(path, *scenes):
    write_text(path, render_svg(*scenes))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spiderlab",
        description="Workspace, Morse and control analysis of tripod spiders.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    source = common.add_mutually_exclusive_group(required=True)
    source.add_argument("--config", help="JSON spider definition.")
    source.add_argument("--preset", choices=sorted(PRESETS.keys() - {"T1"}))
    common.add_argument("--output", help="Write the JSON report here, not to stdout.")
    common.add_argument("-v", "--verbose", action="count", default=0)
    commands = parser.add_subparsers(dest="command", required=True)

    def command(name, handler, help):
        sub = commands.add_parser(name, parents=[common], help=help)
        sub.set_defaults(handler=handler)
        return sub

    potentials = ("hooke", "weighted", "coulomb")
    sub = command("workspace", cmd_workspace, "Boundary arcs, corners and topology.")
    sub.add_argument("--svg")
    sub = command("census", cmd_census, "Morse census of a potential on the workspace.")
    sub.add_argument("--potential", choices=potentials, default="hooke")
    sub = command("cspace", cmd_cspace, "Census lifted to the configuration space.")
    sub.add_argument("--potential", choices=potentials, default="hooke")
    sub = command("trap", cmd_trap, "Sampled trapping or robust control domain.")
    sub.add_argument("--domain", choices=("robust", "trapping"), default="robust")
    sub.add_argument("--resolution", type=int, default=None)
    sub.add_argument("--csv")
    sub.add_argument("--svg")
    sub = command("control", cmd_control, "Parameters that hold a target in place.")
    sub.add_argument("--target", type=float, nargs=2, metavar=("X", "Y"), required=True)
    sub.add_argument("--mode", choices=("hooke", "coulomb"), default="hooke")
    sub = command("flow", cmd_flow, "Gradient flow of a potential in the workspace.")
    sub.add_argument("--start", type=float, nargs=2, metavar=("X", "Y"), required=True)
    sub.add_argument("--potential", choices=potentials, default="hooke")
    sub.add_argument("--max-steps", type=int, default=20000)
    sub.add_argument("--csv")
    sub.add_argument("--svg")
    command("equilibria", cmd_equilibria, "Equilibria of the Coulomb potential.")
    return parser


def main(argv: typing.Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=max(logging.DEBUG, logging.WARNING - 10 * args.verbose),
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        spec = _load_spider(args)
        report = args.handler(args, spec)
    except SpiderDefinitionError as e:
        logger.debug("Definition error", exc_info=True)
        _emit(args, error_report(e))
        return EXIT_DEFINITION
    except SpiderlabError as e:
        logger.debug("Domain error", exc_info=True)
        _emit(args, error_report(e))
        return EXIT_DOMAIN
    _emit(args, report)
    return 0


if __name__ == "__main__":
    sys.exit(main())
