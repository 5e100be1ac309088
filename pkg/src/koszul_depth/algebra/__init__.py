"""Fields, polynomials, monomial orders, the polynomial grammar and quotient rings."""
