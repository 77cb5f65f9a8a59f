# (C) Copyright 2026- the zigzag-boundary developers.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

from .__meta__ import *  # noqa
