# (C) Copyright 2026- the zigzag-boundary developers.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

"""Container for project metadata."""

__name__ = "zigzag_boundary"
__version__ = "0.1.dev0"
__author__ = "zigzag-boundary developers"
__author_email__ = "zigzag-boundary@users.noreply.github.com"
__license__ = "Apache License Version 2.0"
__description__ = (
    "Exact arithmetic and Monte Carlo experiments for the graph of zigzag "
    "diagrams, quasisymmetric functions and oriented paintboxes."
)
