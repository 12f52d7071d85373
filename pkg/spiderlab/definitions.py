import dataclasses
import typing

import numpy as np

from ._util import Iterable
from .constraints import FOOT_NAMES, AnnulusConstraint
from .exceptions import SpiderDefinitionError, SpiderlabError
from .geom import Triangle
from .potentials import ChargeTriple, Weights


@dataclasses.dataclass(frozen=True)
class Leg(Iterable):
    thigh: float
    """
    Length of the link attached to the foot.
    """
    shin: float
    """
    Length of the link attached to the center.
    """

    @property
    def inner_radius(self) -> float:
        return self.thigh - self.shin

    @property
    def outer_radius(self) -> float:
        return self.thigh + self.shin


@dataclasses.dataclass(frozen=True)
class SpiderSpec:
    """
    A tripod spider: three feet and the two link lengths of each leg.
    """

    feet: Triangle
    legs: tuple[Leg, Leg, Leg]
    charges: typing.Optional[ChargeTriple] = None
    weights: typing.Optional[Weights] = None

    def __post_init__(self):
        legs = tuple(self.legs)
        if len(legs) != 3:
            raise SpiderDefinitionError(
                f"A tripod spider needs 3 legs, got {len(legs)}.", "legs"
            )
        object.__setattr__(self, "legs", legs)
        for name, leg in zip(FOOT_NAMES, legs):
            if not (np.isfinite(leg.thigh) and np.isfinite(leg.shin)) or leg.shin <= 0:
                raise SpiderDefinitionError(
                    f"leg {name}: lengths must be positive, got thigh {leg.thigh}"
                    f" and shin {leg.shin}.",
                    f"leg {name}",
                )
            if leg.thigh <= leg.shin:
                raise SpiderDefinitionError(
                    f"leg {name}: thigh ({leg.thigh}) must exceed shin ({leg.shin}).",
                    f"leg {name}",
                )

    @classmethod
    def uniform(cls, feet: Triangle, thigh: float, shin: float, **kwargs):
        """
        Spider with identical legs.
        """
        return cls(feet, (Leg(thigh, shin),) * 3, **kwargs)

    @property
    def inner_radii(self):
        return np.array([leg.inner_radius for leg in self.legs])

    @property
    def outer_radii(self):
        return np.array([leg.outer_radius for leg in self.legs])

    def constraints(self) -> tuple[AnnulusConstraint, ...]:
        return tuple(
            AnnulusConstraint(foot, leg.inner_radius, leg.outer_radius, i)
            for i, (foot, leg) in enumerate(zip(self.feet.vertices, self.legs))
        )

    @property
    def satisfies_coulomb_assumption(self) -> bool:
        """
        Whether ``circumradius > thigh > shin`` holds for every leg.
        """
        radius = self.feet.circumradius
        return all(radius > leg.thigh > leg.shin for leg in self.legs)


LengthValue = typing.Union[float, list[float]]

SpiderDefinitionDict = typing.TypedDict(
    "SpiderDefinitionDict",
    {
        "feet": list[list[float]],
        "thigh": LengthValue,
        "shin": LengthValue,
        "charges": list[float],
        "weights": list[float],
    },
    total=False,
)


def define_spider(definition: SpiderDefinitionDict) -> SpiderSpec:
    """
    Validate a dictionary definition and turn it into a :class:`SpiderSpec`.
    """
    if not isinstance(definition, dict):
        raise SpiderDefinitionError(
            f"{definition!r} is not a valid spider definition.", "definition"
        )
    unknown = set(definition) - set(SpiderDefinitionDict.__annotations__)
    if unknown:
        raise SpiderDefinitionError(
            f"Unknown spider definition keys: {', '.join(sorted(unknown))}.",
            sorted(unknown)[0],
        )
    for key in ("feet", "thigh", "shin"):
        if key not in definition:
            raise SpiderDefinitionError(f"Missing '{key}' value.", key)
    feet = _parse_feet(definition["feet"])
    thighs = _parse_lengths("thigh", definition["thigh"])
    shins = _parse_lengths("shin", definition["shin"])
    charges = _parse_triple("charges", definition.get("charges"), ChargeTriple)
    weights = _parse_triple("weights", definition.get("weights"), Weights)
    return SpiderSpec(
        feet,
        tuple(Leg(t, s) for t, s in zip(thighs, shins)),
        charges=charges,
        weights=weights,
    )


def spider_to_dict(spec: SpiderSpec) -> SpiderDefinitionDict:
    definition = {
        "feet": spec.feet.vertices.tolist(),
        "thigh": [leg.thigh for leg in spec.legs],
        "shin": [leg.shin for leg in spec.legs],
    }
    if spec.charges is not None:
        definition["charges"] = spec.charges.as_array().tolist()
    if spec.weights is not None:
        definition["weights"] = spec.weights.as_array().tolist()
    return definition


def _parse_feet(value) -> Triangle:
    try:
        coords = np.asarray(value, dtype=float)
        if coords.shape != (3, 2) or not np.all(np.isfinite(coords)):
            raise ValueError()
    except (TypeError, ValueError):
        raise SpiderDefinitionError(
            f"feet: {value!r} is not a list of 3 [x, y] pairs.", "feet"
        ) from None
    try:
        return Triangle(*coords)
    except SpiderlabError as e:
        raise SpiderDefinitionError(f"feet: {e}", "feet") from None


def _parse_lengths(key, value) -> list[float]:
    try:
        if isinstance(value, (int, float)) and not isinstance(value, bool):
            return [float(value)] * 3
        lengths = [float(v) for v in value]
        if len(lengths) != 3:
            raise ValueError()
        return lengths
    except (TypeError, ValueError):
        raise SpiderDefinitionError(
            f"{key}: {value!r} is not a number or a list of 3 numbers.", key
        ) from None


def _parse_triple(key, value, cls):
    if value is None:
        return None
    try:
        values = [float(v) for v in value]
        if len(values) != 3:
            raise ValueError()
    except (TypeError, ValueError):
        raise SpiderDefinitionError(
            f"{key}: {value!r} is not 3 numbers.", key
        ) from None
    try:
        return cls(*values)
    except SpiderlabError as e:
        raise SpiderDefinitionError(f"{key}: {e}", key) from None
