"""gfekit: computational toolkit for the generalized Fermat equation
x^r + y^s = z^t.

Submodules:
  arith       exact factored-integer algebra (radicals, coprime/k-full parts,
              integer roots, certified factorization)
  linlog      certified comparison of rational combinations of prime logs
  freycurves  the four Frey-Hellegouarch curve families and their invariants
  ramification  ramification datasets, index bounds, log-volume tables
  bounds      bound configurations, the inequality chain, interval elimination
  structure   decomposition caps, classification tables, exponent sieves
  search      candidate enumeration, exact box checks, the small-z scan
  campaign    sharded, checkpointed campaign plans and reports
  catalog     chi classification, known solutions, signature counters
  cli         batch front-end
"""

__version__ = "0.1.0"
