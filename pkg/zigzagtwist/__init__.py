"""
ZIGZAGTWIST - Spherical twists on zigzag algebras

Braid-group actions on complexes of graded projectives over the zigzag
algebra of the doubled complete graph, slicings, and the metrics on free
groups they induce.
"""

__version__ = "0.1.0"
__author__ = "ZIGZAGTWIST"
