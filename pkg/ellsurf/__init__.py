"""
ellsurf
~~~~~~~

Exact computations for elliptic surfaces with p_g = q = 1.

"""
