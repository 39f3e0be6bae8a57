"""
    dissolve (district dissolution solvers)
"""

version = "0.1"
