"""
File: __init__.py

Author: WhiteMonsterZeroUltraEnergy
Repository: https://github.com/WhiteMonsterZeroUltraEnergy/ultraorder
License: GPL v3

Description:
    Exact computations with ultrafilter orders on chainable continua.
    Everything here is a plain library; the experiments and the command
    line live next to it.
"""

__version__ = "1.0.0"
