"""
Exact verification of C₂-algebra claims for parafermion vertex algebras.

Modules:
- arith: rationals and reduced rational functions in the level k, scalar modes
- matrix: exact matrices, row reduction, kernels, characteristic polynomials
- poly: weighted polynomial rings, derivations, substitution
- corpus: named polynomials, derivations and matrices
- slices: weight-slice linear algebra (spans, kernels, ideals, codimensions)
- ideals: cached slices of 𝒜, J, J∩𝒜 and I_s for one level
- formulas: closed-form dimensions and coefficients
- weyl: PBW vectors and mode straightening on the vacuum Weyl module
- checks: the check catalogue
- config, runner, report, cli: configuration, execution, reports, command line
"""
