"""
Reference feet triangle and spiders.
"""

import math

from .definitions import SpiderSpec
from .geom import Triangle


T1 = Triangle((1.0, 0.0), (-0.5, math.sqrt(3) / 2), (-0.5, -math.sqrt(3) / 2))
#: Annuli ``[0.2, 2.0]``: a disc with three holes.
S1 = SpiderSpec.uniform(T1, thigh=1.1, shin=0.9)
#: Annuli ``[0.5, 1.3]``: a contractible region with inactive inner circles.
S2 = SpiderSpec.uniform(T1, thigh=0.9, shin=0.4)

PRESETS = {"T1": T1, "S1": S1, "S2": S2}
