# -*- coding: utf-8 -*-
from adicdisc.ordgroup import ConvexSubgroup, GroupDescriptor, GroupValue, cmp
from adicdisc.points import (
    Classical,
    Disc,
    Plain,
    PPower,
    Type5,
    classify,
    evaluate,
    gauss_point,
    x_one_minus,
    x_one_plus,
)
from adicdisc.tate import TateSeries, gauss_norm
from adicdisc.version import __version__
