from .chirality import octad_signs, sign6, sign7, triple_link
from .nets import (NetOfQuadrics, QuadricForm, QuarticForm, bitangent_pencil, complete_octad,
                   conditioned_hessian, hessian, hessian_by_interpolation, net_through, verify_octad)
from .ovals import count_ovals, count_until_stable
from .points import ProjPoint, coplanar, mirror, read_config, write_config

__all__ = [
    "ProjPoint", "coplanar", "mirror", "read_config", "write_config",
    "QuadricForm", "NetOfQuadrics", "QuarticForm", "net_through", "complete_octad", "verify_octad",
    "hessian", "hessian_by_interpolation", "conditioned_hessian", "bitangent_pencil",
    "triple_link", "sign6", "sign7", "octad_signs", "count_ovals", "count_until_stable",
]
