#ifndef PQRS_REPORT_HPP
#define PQRS_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include "pqrs/scalar.hpp"
#include "pqrs/xpoly.hpp"

namespace pqrs {

/// Outcome of a single polynomial-identity check. The residual is the
/// difference of the two sides; pass holds exactly when it is the zero
/// polynomial, so failures stay diagnosable.
struct LinOpReport {
  std::string name;
  std::vector<long long> indices;
  XPoly residual;
  bool pass = false;
};

inline LinOpReport makeReport(std::string name, std::vector<long long> indices,
                              XPoly residual) {
  LinOpReport r;
  r.name = std::move(name);
  r.indices = std::move(indices);
  r.pass = residual.isZero();
  r.residual = std::move(residual);
  return r;
}

/// Outcome of a matrix-algebra relation check on a truncated basis.
/// `interior` is the per-mode count of basis indices on which the relation
/// is unaffected by the truncation cut; pass holds exactly when every
/// residual entry over those columns is the zero Scalar.
struct AlgebraReport {
  std::string relation;
  int interior = 0;
  bool pass = false;
  Scalar worstResidual;
};

}  // namespace pqrs

#endif
