#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# Time-stamp: <2026-10-19 00:12:40 krylon>
#
# /data/code/python/circtotal/src/circtotal/__init__.py
# created on 25. 09. 2025
# (c) 2025 Benjamin Walkenhorst
#
# This file is part of circtotal. It is distributed under the
# terms of the GNU General Public License 3. See the file LICENSE for details
# or find a copy online at https://www.gnu.org/licenses/gpl-3.0

"""
circtotal.__init__

(c) 2025 Benjamin Walkenhorst

Circular total colourings of graphs with half-edges.
"""

# Local Variables: #
# python-indent: 4 #
# End: #
