"""Floating-point tolerance policy for the l_p (1 < p < oo) code paths.

Rational kinds (linf, l1, poly) never consult these values: every
comparison there is exact.
"""

# |f(y)| below this counts as zero when f has dual norm one.
FUNCTIONAL_TOL = 1e-9

# The one-dimensional norm minimizer declares orthogonality when the
# minimum stays above (1 - ORACLE_REL_TOL) times the base norm.
ORACLE_REL_TOL = 1e-7

# Ternary search stops once the bracket width falls below this fraction
# of the initial interval.
TERNARY_REL_WIDTH = 1e-10
