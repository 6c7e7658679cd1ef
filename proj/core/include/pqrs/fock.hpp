#ifndef PQRS_FOCK_HPP
#define PQRS_FOCK_HPP

#include <vector>

#include "pqrs/report.hpp"
#include "pqrs/scalar.hpp"

namespace pqrs {

/// Dense square matrix of Scalars over a truncated occupation basis
/// {e_0, ..., e_Nmax} (modes = 1) or its two-mode tensor square
/// (modes = 2, index n1*(Nmax+1) + n2). Column n holds the image of e_n.
class FockMatrix {
 public:
  FockMatrix(int dim, int modes = 1);

  static FockMatrix identity(int dim, int modes = 1);
  static FockMatrix diagonal(std::vector<Scalar> entries, int modes = 1);

  int dim() const { return dim_; }
  int modes() const { return modes_; }

  Scalar& at(int r, int c) { return a_[static_cast<std::size_t>(r) * dim_ + c]; }
  const Scalar& at(int r, int c) const {
    return a_[static_cast<std::size_t>(r) * dim_ + c];
  }

  bool isZero() const;

  FockMatrix operator-() const;
  FockMatrix& operator+=(const FockMatrix& o);
  FockMatrix& operator-=(const FockMatrix& o);

  friend FockMatrix operator+(FockMatrix a, const FockMatrix& b) { return a += b; }
  friend FockMatrix operator-(FockMatrix a, const FockMatrix& b) { return a -= b; }
  friend FockMatrix operator*(const FockMatrix& a, const FockMatrix& b);
  friend FockMatrix operator*(const Scalar& c, const FockMatrix& m);
  friend bool operator==(const FockMatrix& a, const FockMatrix& b) {
    return a.dim_ == b.dim_ && a.a_ == b.a_;
  }

  /// Tensor product embedding two single-mode operators on the two-mode
  /// basis; (m1 (x) m2) e_{n1,n2} = (m1 e_n1) (x) (m2 e_n2).
  static FockMatrix kron(const FockMatrix& m1, const FockMatrix& m2);

 private:
  int dim_;
  int modes_;
  std::vector<Scalar> a_;
};

FockMatrix commutator(const FockMatrix& a, const FockMatrix& b);

struct Ladder {
  FockMatrix minus;  // A_- e_n = [n] e_(n-1)
  FockMatrix plus;   // A_+ e_n = e_(n+1), annihilating the top state
};

/// Ladder pair on {e_0..e_Nmax} in the unnormalized basis, where the
/// lowering matrix carries the full [n]_{p,q} weight and the raising matrix
/// carries 1. All bilinear relations agree with the symmetric sqrt-weighted
/// convention because the two differ by a diagonal similarity.
Ladder buildLadder(int nmax);

/// p = 1 slice: lowering weights [n]_q.
Ladder buildLadderQ(int nmax);

/// p = q = 1 slice: lowering weights n.
Ladder buildLadderClassical(int nmax);

/// diag(0, 1, ..., Nmax).
FockMatrix buildNumber(int nmax);

/// diag(base^0, base^1, ..., base^Nmax); base may carry half-unit
/// exponents, e.g. q^(-1/2).
FockMatrix buildDiagPower(const Monomial& base, int nmax);

/// Oscillator relations with symbolic p, q on the given ladder pair,
/// checked on interior columns n < Nmax:
///   [N, A+] = A+, [N, A-] = -A-,
///   A-A+ - q A+A- = p^N, A-A+ - p A+A- = q^N,
///   A+A- = diag([n]), A-A+ = diag([n+1]).
std::vector<AlgebraReport> checkPqOscillatorWith(const Ladder& l, int nmax);
std::vector<AlgebraReport> checkPqOscillator(int nmax);

/// p = 1 slice: A-A+ - q A+A- = 1 plus the commutators and diagonals.
std::vector<AlgebraReport> checkQOscillator(int nmax);

/// p = q = 1 slice: [A-, A+] = 1 plus the number commutators.
std::vector<AlgebraReport> checkClassicalOscillator(int nmax);

/// Two commuting classical modes; bilinears
///   x+ = a+(1) a-(2), x- = a+(2) a-(1), x0 = (n(1) - n(2))/2
/// satisfy [x0, x+-] = +-x+-, [x+, x-] = 2 x0 on the columns where both
/// mode indices stay below Nmax.
std::vector<AlgebraReport> checkJsSl2(int nmax);

/// Two commuting q-modes; bilinears
///   X+ = A+(1) q^(-N(2)/2) A-(2), X- = A+(2) q^(-N(2)/2) A-(1),
///   X0 = (N(1) - N(2))/2
/// satisfy [X0, X+-] = +-X+- and X+X- - q^(-1) X-X+ = [2 X0]_q, the right
/// side the diagonal of Laurent q-numbers [n1-n2]_q.
std::vector<AlgebraReport> checkJsUqSl2(int nmax);

/// User-supplied generators for the two-parameter relations
///   [X0, X+] = X+, [X0, X-] = -X-,
///   X+X- - (pq)^(-1) X-X+ = [2 X0]_{p,q}.
/// x0 lists the diagonal of X0; entries must be half-integers so that
/// 2 X0 has integer spectrum. No realization is built in; callers provide
/// their own matrices and the column range the truncation leaves intact.
struct Ugl2Generators {
  std::vector<Rational> x0;
  FockMatrix xPlus;
  FockMatrix xMinus;
};

std::vector<AlgebraReport> checkUgl2Relations(const Ugl2Generators& g, int interiorDim);

}  // namespace pqrs

#endif
