// Acceptance gate: every release criterion, each timed and reported on one
// line. Exits nonzero if any line fails.
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "pqrs/errors.hpp"
#include "pqrs/fock.hpp"
#include "pqrs/ops.hpp"
#include "pqrs/poly.hpp"
#include "pqrs/pqcore.hpp"
#include "pqrs/xpoly.hpp"
#include "support/gen.hpp"

using pqrs::Rational;
using pqrs::Scalar;
using pqrs::XPoly;

namespace {

int failures = 0;
std::string cliPath;

void criterion(int id, const std::string& label, double limitSeconds,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (ok && limitSeconds > 0 && elapsed > limitSeconds) {
    ok = false;
    detail = "time limit exceeded";
  }
  std::printf("[%s] criterion %d: %s (%.2fs%s%s)\n", ok ? "PASS" : "FAIL", id,
              label.c_str(), elapsed, detail.empty() ? "" : "; ",
              detail.c_str());
  if (!ok) ++failures;
}

int runCli(const std::string& args, std::string& out) {
  FILE* pipe = popen((cliPath + " " + args + " 2>/dev/null").c_str(), "r");
  if (pipe == nullptr) return -1;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  out.clear();
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

bool dualConstruction(std::string& detail) {
  for (int n = 0; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) {
      if (!(pqrs::pqBinomial(n, k) == pqrs::pqBinomialPascal(n, k))) {
        detail = "mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k);
        return false;
      }
    }
  }
  return true;
}

bool reductions(std::string& detail) {
  for (int n = 0; n <= 10; ++n) {
    for (int k = 0; k <= n; ++k) {
      if (!pqrs::checkBinomialPPowerIdentity(n, k).pass) {
        detail = "power identity failed at n=" + std::to_string(n);
        return false;
      }
    }
  }
  std::mt19937_64 rng(2026);
  for (int i = 0; i < 50; ++i) {
    const Rational a = gen::nonzeroRational(rng), b = gen::rational(rng);
    const int n = static_cast<int>(gen::pick(rng, 0, 8));
    if (!pqrs::checkShiftedFactorialReduction(a, b, n).pass) {
      detail = "shifted factorial failed at sample " + std::to_string(i);
      return false;
    }
  }
  return true;
}

bool ladderSuite(std::string& detail) {
  for (int n = 0; n <= 10; ++n) {
    for (const auto& r : pqrs::checkLadderSuite(n)) {
      if (!r.pass || !r.residual.isZero()) {
        detail = r.name + " failed at n=" + std::to_string(n);
        return false;
      }
    }
  }
  return true;
}

bool differenceEquation(std::string& detail) {
  for (int n = 0; n <= 10; ++n) {
    if (!pqrs::checkDiffeq(n).pass) {
      detail = "annihilator failed at n=" + std::to_string(n);
      return false;
    }
    if (!pqrs::checkQDiffeq(n).pass) {
      detail = "single-parameter specialization failed at n=" + std::to_string(n);
      return false;
    }
  }
  return true;
}

bool qSpecializationChain(std::string& detail) {
  const auto atPOne = [](const Scalar& c) { return c.atPOne(); };
  for (int n = 0; n <= 10; ++n) {
    for (const auto& r : pqrs::checkQLadderSuite(n)) {
      if (!r.pass) {
        detail = r.name + " failed at n=" + std::to_string(n);
        return false;
      }
    }
    if (n >= 1) {
      if (!pqrs::checkQRecurrence(n).pass) {
        detail = "recurrence failed at n=" + std::to_string(n);
        return false;
      }
      for (int k = 0; k <= n + 1; ++k) {
        if (!pqrs::checkQid(n, k).pass) {
          detail = "square identity failed at n=" + std::to_string(n);
          return false;
        }
      }
    }
    // the single-parameter operators really are the p = 1 slice
    const XPoly h = pqrs::pqRsPoly(n);
    const XPoly hQ = h.mapCoeffs(atPOne);
    if (!(hQ == pqrs::rsPoly(n))) {
      detail = "family slice mismatch at n=" + std::to_string(n);
      return false;
    }
    if (!(pqrs::dPq(h).mapCoeffs(atPOne) == pqrs::dQ(hQ))) {
      detail = "lowering slice mismatch at n=" + std::to_string(n);
      return false;
    }
    if (!(pqrs::raisePq(n, h).mapCoeffs(atPOne) == pqrs::raiseQ(hQ))) {
      detail = "raising slice mismatch at n=" + std::to_string(n);
      return false;
    }
  }
  return true;
}

bool fockAlgebra(std::string& detail) {
  for (const auto& r : pqrs::checkPqOscillator(12)) {
    if (!r.pass || !r.worstResidual.isZero()) {
      detail = r.relation + " failed";
      return false;
    }
  }
  for (const auto& r : pqrs::checkJsSl2(6)) {
    if (!r.pass) {
      detail = r.relation + " failed";
      return false;
    }
  }
  for (const auto& r : pqrs::checkJsUqSl2(6)) {
    if (!r.pass) {
      detail = r.relation + " failed";
      return false;
    }
  }
  return true;
}

bool families(std::string& detail) {
  for (int n = 0; n <= 10; ++n) {
    if (!pqrs::checkSwMatchesInvertedRs(n).pass) {
      detail = "inverted family mismatch at n=" + std::to_string(n);
      return false;
    }
  }
  for (int n = 0; n <= 8; ++n) {
    if (!pqrs::checkSpecialRsQinv(n).pass) {
      detail = "inverse-parameter family mismatch at n=" + std::to_string(n);
      return false;
    }
  }
  std::mt19937_64 rng(5);
  const double twoPi = 8.0 * std::atan(1.0);
  double worstImag = 0.0;
  double worstCos = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const long long dp = gen::pick(rng, 1, 4), dq = gen::pick(rng, 1, 4);
    const Rational p0(gen::pick(rng, 1, 4 * dp), dp);
    const Rational q0(gen::pick(rng, 1, 4 * dq), dq);
    const int n = static_cast<int>(gen::pick(rng, 0, 10));
    const double theta =
        twoPi * static_cast<double>(rng() >> 11) / 9007199254740992.0;
    const auto r = pqrs::hermiteEval(n, theta, p0, q0);
    if (r.imagResidue > worstImag) worstImag = r.imagResidue;
    const auto r1 = pqrs::hermiteEval(1, theta, p0, q0);
    const double dev = std::abs(r1.value - 2.0 * std::cos(theta));
    if (dev > worstCos) worstCos = dev;
  }
  if (worstImag > 1e-10) {
    detail = "imaginary residue " + std::to_string(worstImag);
    return false;
  }
  if (worstCos > 1e-12) {
    detail = "degree-one deviation " + std::to_string(worstCos);
    return false;
  }
  return true;
}

bool noRescaling(std::string& detail) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 100; ++i) {
    Rational p0 = gen::rational(rng), q0 = gen::rational(rng);
    if ((p0 - 1).isZero()) p0 = Rational(7, 2);
    if ((q0 - 1).isZero()) q0 = Rational(9, 2);
    const auto r = pqrs::checkNoRescaling(p0, q0);
    if (!r.pass) {
      detail = "obstruction missing at sample " + std::to_string(i);
      return false;
    }
  }
  const auto degenerate = [](const Rational& p0, const Rational& q0) {
    try {
      pqrs::checkNoRescaling(p0, q0);
      return false;
    } catch (const pqrs::PreconditionViolated&) {
      return true;
    }
  };
  if (!degenerate(Rational(1), Rational(3)) || !degenerate(Rational(2), Rational(1))) {
    detail = "degenerate cases not reported";
    return false;
  }
  return true;
}

bool cliContract(std::string& detail) {
  std::string out1, out2, outBad;
  if (runCli("check", out1) != 0) {
    detail = "default suite did not exit 0";
    return false;
  }
  if (runCli("check", out2) != 0 || out1 != out2) {
    detail = "output not byte-identical across runs";
    return false;
  }
  std::string corrupted;
  FILE* pipe = popen(
      ("env PQRS_CORRUPT=ladder " + cliPath + " check --suites fock --fock-nmax 3 2>/dev/null")
          .c_str(),
      "r");
  if (pipe == nullptr) {
    detail = "could not launch corrupted run";
    return false;
  }
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) corrupted.append(buf.data(), got);
  const int status = pclose(pipe);
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  if (code != 1) {
    detail = "corrupted run exited " + std::to_string(code) + ", want 1";
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: acceptance <path-to-cli>\n");
    return 2;
  }
  cliPath = argv[1];

  criterion(1, "dual binomial construction, n <= 12", 5.0, dualConstruction);
  criterion(2, "power and shifted-factorial reductions", 5.0, reductions);
  criterion(3, "ladder suite, n <= 10, symbolic", 10.0, ladderSuite);
  criterion(4, "difference equation and its slice", 5.0, differenceEquation);
  criterion(5, "single-parameter specialization chain", 0.0, qSpecializationChain);
  criterion(6, "matrix algebra at truncation 12 / 6", 60.0, fockAlgebra);
  criterion(7, "derived families and real-value diagnostics", 0.0, families);
  criterion(8, "rescaling obstruction, 100 samples", 0.0, noRescaling);
  criterion(9, "command-line contract", 0.0, cliContract);

  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
