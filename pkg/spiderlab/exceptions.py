from typing import Type

from errr.tree import exception as _e
from errr.tree import make_tree as _make_tree

_make_tree(
    globals(),
    SpiderlabError=_e(
        SpiderDefinitionError=_e("field"),
        GeometryError=_e(
            DegenerateTriangle=_e("vertices"),
            DegenerateAtFoot=_e("point"),
            CoincidentCircles=_e("center", "radius"),
            DegenerateLine=_e(),
        ),
        PotentialError=_e(
            InvalidWeights=_e("weights"),
            PoleAtFoot=_e("point"),
            ZeroCharge=_e(),
        ),
        WorkspaceError=_e(
            EmptyWorkspace=_e(),
            DegenerateTangency=_e("circles"),
            NotInWorkspace=_e("point"),
        ),
        MorseError=_e(
            NonMorsePoint=_e("point"),
            TangentGradient=_e("point"),
        ),
        CspaceError=_e(
            Unreachable=_e("point"),
            UnsupportedTopology=_e("betti"),
        ),
        ControlError=_e(
            TargetOutsideTriangle=_e("target"),
            NotTrappable=_e("target"),
            StalledAtSaddle=_e("trajectory"),
            MaxwellBoundError=_e("count"),
        ),
        OracleError=_e(
            StencilOutOfDomain=_e("point"),
            ResolutionTooCoarse=_e("counts"),
        ),
    ),
)

SpiderlabError: Type[Exception]
SpiderDefinitionError: Type[SpiderlabError]
GeometryError: Type[SpiderlabError]
DegenerateTriangle: Type[GeometryError]
DegenerateAtFoot: Type[GeometryError]
CoincidentCircles: Type[GeometryError]
DegenerateLine: Type[GeometryError]
PotentialError: Type[SpiderlabError]
InvalidWeights: Type[PotentialError]
PoleAtFoot: Type[PotentialError]
ZeroCharge: Type[PotentialError]
WorkspaceError: Type[SpiderlabError]
EmptyWorkspace: Type[WorkspaceError]
DegenerateTangency: Type[WorkspaceError]
NotInWorkspace: Type[WorkspaceError]
MorseError: Type[SpiderlabError]
NonMorsePoint: Type[MorseError]
TangentGradient: Type[MorseError]
CspaceError: Type[SpiderlabError]
Unreachable: Type[CspaceError]
UnsupportedTopology: Type[CspaceError]
ControlError: Type[SpiderlabError]
TargetOutsideTriangle: Type[ControlError]
NotTrappable: Type[ControlError]
StalledAtSaddle: Type[ControlError]
MaxwellBoundError: Type[ControlError]
OracleError: Type[SpiderlabError]
StencilOutOfDomain: Type[OracleError]
ResolutionTooCoarse: Type[OracleError]
