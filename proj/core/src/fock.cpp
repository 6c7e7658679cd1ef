#include "pqrs/fock.hpp"

#include <functional>
#include <utility>

#include "pqrs/errors.hpp"
#include "pqrs/pqcore.hpp"

namespace pqrs {

namespace {

void requireSameShape(const FockMatrix& a, const FockMatrix& b) {
  if (a.dim() != b.dim() || a.modes() != b.modes()) {
    throw DimensionMismatch("matrix shapes differ");
  }
}

AlgebraReport reportOn(std::string relation, const FockMatrix& diff,
                       int interiorDim,
                       const std::function<bool(int)>& colInterior) {
  AlgebraReport rep;
  rep.relation = std::move(relation);
  rep.interior = interiorDim;
  rep.pass = true;
  for (int c = 0; c < diff.dim(); ++c) {
    if (!colInterior(c)) continue;
    for (int r = 0; r < diff.dim(); ++r) {
      const Scalar& e = diff.at(r, c);
      if (e.isZero()) continue;
      rep.pass = false;
      if (e.numTerms() > rep.worstResidual.numTerms()) rep.worstResidual = e;
    }
  }
  return rep;
}

AlgebraReport reportSingleMode(std::string relation, const FockMatrix& diff, int nmax) {
  return reportOn(std::move(relation), diff, nmax,
                  [nmax](int c) { return c < nmax; });
}

AlgebraReport reportTwoMode(std::string relation, const FockMatrix& diff, int nmax) {
  const int width = nmax + 1;
  return reportOn(std::move(relation), diff, nmax, [nmax, width](int c) {
    return c / width < nmax && c % width < nmax;
  });
}

Ladder buildLadderWith(int nmax, const std::function<Scalar(int)>& weight) {
  if (nmax < 2) throw PreconditionViolated("ladder needs nmax >= 2");
  const int dim = nmax + 1;
  Ladder l{FockMatrix(dim), FockMatrix(dim)};
  for (int n = 1; n <= nmax; ++n) l.minus.at(n - 1, n) = weight(n);
  for (int n = 0; n < nmax; ++n) l.plus.at(n + 1, n) = Scalar::one();
  return l;
}

long long asLong(const BigInt& v) { return v.convert_to<long long>(); }

}  // namespace

FockMatrix::FockMatrix(int dim, int modes) : dim_(dim), modes_(modes), a_(
    static_cast<std::size_t>(dim) * dim) {
  if (dim < 1) throw PreconditionViolated("FockMatrix dim must be positive");
}

FockMatrix FockMatrix::identity(int dim, int modes) {
  FockMatrix m(dim, modes);
  for (int i = 0; i < dim; ++i) m.at(i, i) = Scalar::one();
  return m;
}

FockMatrix FockMatrix::diagonal(std::vector<Scalar> entries, int modes) {
  FockMatrix m(static_cast<int>(entries.size()), modes);
  for (int i = 0; i < m.dim(); ++i) m.at(i, i) = std::move(entries[i]);
  return m;
}

bool FockMatrix::isZero() const {
  for (const auto& e : a_) {
    if (!e.isZero()) return false;
  }
  return true;
}

FockMatrix FockMatrix::operator-() const {
  FockMatrix r(dim_, modes_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
  return r;
}

FockMatrix& FockMatrix::operator+=(const FockMatrix& o) {
  requireSameShape(*this, o);
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

FockMatrix& FockMatrix::operator-=(const FockMatrix& o) {
  requireSameShape(*this, o);
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

FockMatrix operator*(const FockMatrix& a, const FockMatrix& b) {
  requireSameShape(a, b);
  const int dim = a.dim_;
  FockMatrix r(dim, a.modes_);
  for (int i = 0; i < dim; ++i) {
    for (int k = 0; k < dim; ++k) {
      const Scalar& left = a.at(i, k);
      if (left.isZero()) continue;
      for (int j = 0; j < dim; ++j) {
        const Scalar& right = b.at(k, j);
        if (right.isZero()) continue;
        r.at(i, j) += left * right;
      }
    }
  }
  return r;
}

FockMatrix operator*(const Scalar& c, const FockMatrix& m) {
  FockMatrix r(m.dim_, m.modes_);
  for (std::size_t i = 0; i < m.a_.size(); ++i) r.a_[i] = c * m.a_[i];
  return r;
}

FockMatrix FockMatrix::kron(const FockMatrix& m1, const FockMatrix& m2) {
  const int d1 = m1.dim();
  const int d2 = m2.dim();
  FockMatrix r(d1 * d2, 2);
  for (int r1 = 0; r1 < d1; ++r1) {
    for (int c1 = 0; c1 < d1; ++c1) {
      const Scalar& left = m1.at(r1, c1);
      if (left.isZero()) continue;
      for (int r2 = 0; r2 < d2; ++r2) {
        for (int c2 = 0; c2 < d2; ++c2) {
          const Scalar& right = m2.at(r2, c2);
          if (right.isZero()) continue;
          r.at(r1 * d2 + r2, c1 * d2 + c2) = left * right;
        }
      }
    }
  }
  return r;
}

FockMatrix commutator(const FockMatrix& a, const FockMatrix& b) {
  return a * b - b * a;
}

Ladder buildLadder(int nmax) {
  return buildLadderWith(nmax, [](int n) { return pqNumber(n); });
}

Ladder buildLadderQ(int nmax) {
  return buildLadderWith(nmax, [](int n) { return pqNumber(n).atPOne(); });
}

Ladder buildLadderClassical(int nmax) {
  return buildLadderWith(nmax, [](int n) { return Scalar(n); });
}

FockMatrix buildNumber(int nmax) {
  std::vector<Scalar> d(nmax + 1);
  for (int n = 0; n <= nmax; ++n) d[n] = Scalar(n);
  return FockMatrix::diagonal(std::move(d));
}

FockMatrix buildDiagPower(const Monomial& base, int nmax) {
  if (base.isZero()) throw PreconditionViolated("buildDiagPower requires base != 0");
  std::vector<Scalar> d(nmax + 1);
  for (int n = 0; n <= nmax; ++n) d[n] = Scalar(base.pow(n));
  return FockMatrix::diagonal(std::move(d));
}

std::vector<AlgebraReport> checkPqOscillatorWith(const Ladder& l, int nmax) {
  if (nmax < 3) throw TruncationTooSmall("oscillator check needs nmax >= 3");
  const FockMatrix number = buildNumber(nmax);
  const FockMatrix upDown = l.plus * l.minus;
  const FockMatrix downUp = l.minus * l.plus;

  std::vector<Scalar> diagNum(nmax + 1);
  std::vector<Scalar> diagNumShift(nmax + 1);
  for (int n = 0; n <= nmax; ++n) {
    diagNum[n] = pqNumber(n);
    diagNumShift[n] = pqNumber(n + 1);
  }

  std::vector<AlgebraReport> out;
  out.push_back(reportSingleMode("pq-number-raising-commutator",
                                 commutator(number, l.plus) - l.plus, nmax));
  out.push_back(reportSingleMode("pq-number-lowering-commutator",
                                 commutator(number, l.minus) + l.minus, nmax));
  out.push_back(reportSingleMode(
      "pq-q-weighted-bilinear",
      downUp - Scalar::q() * upDown - buildDiagPower(Monomial::p(), nmax), nmax));
  out.push_back(reportSingleMode(
      "pq-p-weighted-bilinear",
      downUp - Scalar::p() * upDown - buildDiagPower(Monomial::q(), nmax), nmax));
  out.push_back(reportSingleMode(
      "pq-number-product-diagonal",
      upDown - FockMatrix::diagonal(std::move(diagNum)), nmax));
  out.push_back(reportSingleMode(
      "pq-shifted-number-product-diagonal",
      downUp - FockMatrix::diagonal(std::move(diagNumShift)), nmax));
  return out;
}

std::vector<AlgebraReport> checkPqOscillator(int nmax) {
  if (nmax < 3) throw TruncationTooSmall("oscillator check needs nmax >= 3");
  return checkPqOscillatorWith(buildLadder(nmax), nmax);
}

std::vector<AlgebraReport> checkQOscillator(int nmax) {
  if (nmax < 3) throw TruncationTooSmall("oscillator check needs nmax >= 3");
  const Ladder l = buildLadderQ(nmax);
  const FockMatrix number = buildNumber(nmax);
  const FockMatrix upDown = l.plus * l.minus;
  const FockMatrix downUp = l.minus * l.plus;

  std::vector<Scalar> diagNum(nmax + 1);
  std::vector<Scalar> diagNumShift(nmax + 1);
  for (int n = 0; n <= nmax; ++n) {
    diagNum[n] = pqNumber(n).atPOne();
    diagNumShift[n] = pqNumber(n + 1).atPOne();
  }

  std::vector<AlgebraReport> out;
  out.push_back(reportSingleMode("q-number-raising-commutator",
                                 commutator(number, l.plus) - l.plus, nmax));
  out.push_back(reportSingleMode("q-number-lowering-commutator",
                                 commutator(number, l.minus) + l.minus, nmax));
  out.push_back(reportSingleMode(
      "q-unit-bilinear",
      downUp - Scalar::q() * upDown - FockMatrix::identity(nmax + 1), nmax));
  out.push_back(reportSingleMode(
      "q-number-product-diagonal",
      upDown - FockMatrix::diagonal(std::move(diagNum)), nmax));
  out.push_back(reportSingleMode(
      "q-shifted-number-product-diagonal",
      downUp - FockMatrix::diagonal(std::move(diagNumShift)), nmax));
  return out;
}

std::vector<AlgebraReport> checkClassicalOscillator(int nmax) {
  if (nmax < 3) throw TruncationTooSmall("oscillator check needs nmax >= 3");
  const Ladder l = buildLadderClassical(nmax);
  const FockMatrix number = buildNumber(nmax);

  std::vector<AlgebraReport> out;
  out.push_back(reportSingleMode("classical-number-raising-commutator",
                                 commutator(number, l.plus) - l.plus, nmax));
  out.push_back(reportSingleMode("classical-number-lowering-commutator",
                                 commutator(number, l.minus) + l.minus, nmax));
  out.push_back(reportSingleMode(
      "classical-unit-commutator",
      commutator(l.minus, l.plus) - FockMatrix::identity(nmax + 1), nmax));
  return out;
}

std::vector<AlgebraReport> checkJsSl2(int nmax) {
  if (nmax < 3) throw TruncationTooSmall("two-mode check needs nmax >= 3");
  const int dim = nmax + 1;
  const Ladder l = buildLadderClassical(nmax);
  const FockMatrix id = FockMatrix::identity(dim);
  const FockMatrix am1 = FockMatrix::kron(l.minus, id);
  const FockMatrix ap1 = FockMatrix::kron(l.plus, id);
  const FockMatrix am2 = FockMatrix::kron(id, l.minus);
  const FockMatrix ap2 = FockMatrix::kron(id, l.plus);

  const FockMatrix xPlus = ap1 * am2;
  const FockMatrix xMinus = ap2 * am1;
  std::vector<Scalar> halfDiff(dim * dim);
  for (int n1 = 0; n1 <= nmax; ++n1) {
    for (int n2 = 0; n2 <= nmax; ++n2) {
      halfDiff[n1 * dim + n2] = Scalar(Rational(n1 - n2, 2));
    }
  }
  const FockMatrix x0 = FockMatrix::diagonal(std::move(halfDiff), 2);

  std::vector<AlgebraReport> out;
  out.push_back(reportTwoMode("sl2-cartan-raising",
                              commutator(x0, xPlus) - xPlus, nmax));
  out.push_back(reportTwoMode("sl2-cartan-lowering",
                              commutator(x0, xMinus) + xMinus, nmax));
  out.push_back(reportTwoMode("sl2-ladder-commutator",
                              commutator(xPlus, xMinus) - Scalar(2) * x0, nmax));

  AlgebraReport modes;
  modes.relation = "sl2-modes-commute";
  modes.interior = dim;
  modes.pass = true;
  for (const auto* g1 : {&am1, &ap1}) {
    for (const auto* g2 : {&am2, &ap2}) {
      const AlgebraReport piece = reportOn(
          modes.relation, commutator(*g1, *g2), dim, [](int) { return true; });
      if (!piece.pass) {
        modes.pass = false;
        if (piece.worstResidual.numTerms() > modes.worstResidual.numTerms()) {
          modes.worstResidual = piece.worstResidual;
        }
      }
    }
  }
  out.push_back(std::move(modes));
  return out;
}

std::vector<AlgebraReport> checkJsUqSl2(int nmax) {
  if (nmax < 3) throw TruncationTooSmall("two-mode check needs nmax >= 3");
  const int dim = nmax + 1;
  const Ladder l = buildLadderQ(nmax);
  const FockMatrix qHalfInv = buildDiagPower(Monomial(1, 0, -1), nmax);

  // X+ = A+(1) q^(-N(2)/2) A-(2) factorizes across the tensor product as
  // (A+) (x) (q^(-N/2) A-); likewise X- = (A-) (x) (A+ q^(-N/2)).
  const FockMatrix xPlus = FockMatrix::kron(l.plus, qHalfInv * l.minus);
  const FockMatrix xMinus = FockMatrix::kron(l.minus, l.plus * qHalfInv);

  std::vector<Scalar> halfDiff(dim * dim);
  std::vector<Scalar> laurent(dim * dim);
  for (int n1 = 0; n1 <= nmax; ++n1) {
    for (int n2 = 0; n2 <= nmax; ++n2) {
      halfDiff[n1 * dim + n2] = Scalar(Rational(n1 - n2, 2));
      laurent[n1 * dim + n2] = qNumberLaurent(n1 - n2);
    }
  }
  const FockMatrix x0 = FockMatrix::diagonal(std::move(halfDiff), 2);
  const FockMatrix rhs = FockMatrix::diagonal(std::move(laurent), 2);

  std::vector<AlgebraReport> out;
  out.push_back(reportTwoMode("uqsl2-cartan-raising",
                              commutator(x0, xPlus) - xPlus, nmax));
  out.push_back(reportTwoMode("uqsl2-cartan-lowering",
                              commutator(x0, xMinus) + xMinus, nmax));
  out.push_back(reportTwoMode(
      "uqsl2-q-weighted-bilinear",
      xPlus * xMinus - Scalar::qPow(-1) * (xMinus * xPlus) - rhs, nmax));
  return out;
}

std::vector<AlgebraReport> checkUgl2Relations(const Ugl2Generators& g, int interiorDim) {
  requireSameShape(g.xPlus, g.xMinus);
  const int dim = g.xPlus.dim();
  if (static_cast<int>(g.x0.size()) != dim) {
    throw DimensionMismatch("x0 diagonal length must match matrix dimension");
  }
  if (interiorDim < 1 || interiorDim > dim) {
    throw PreconditionViolated("interiorDim out of range");
  }

  std::vector<Scalar> x0Diag(dim);
  std::vector<Scalar> rhsDiag(dim);
  for (int i = 0; i < dim; ++i) {
    const Rational doubled = g.x0[i] * 2;
    if (!doubled.isInteger()) {
      throw PreconditionViolated("x0 entries must be half-integers");
    }
    x0Diag[i] = Scalar(g.x0[i]);
    rhsDiag[i] = pqNumberLaurent(asLong(doubled.numerator()));
  }
  const FockMatrix x0 = FockMatrix::diagonal(std::move(x0Diag), g.xPlus.modes());
  const FockMatrix rhs = FockMatrix::diagonal(std::move(rhsDiag), g.xPlus.modes());
  const Scalar pqInv = Scalar::halfTerm(1, -2, -2);

  const auto interior = [interiorDim](int c) { return c < interiorDim; };
  std::vector<AlgebraReport> out;
  out.push_back(reportOn("ugl2-cartan-raising",
                         commutator(x0, g.xPlus) - g.xPlus, interiorDim, interior));
  out.push_back(reportOn("ugl2-cartan-lowering",
                         commutator(x0, g.xMinus) + g.xMinus, interiorDim, interior));
  out.push_back(reportOn(
      "ugl2-pq-weighted-bilinear",
      g.xPlus * g.xMinus - pqInv * (g.xMinus * g.xPlus) - rhs, interiorDim, interior));
  return out;
}

}  // namespace pqrs
