#include "pqrs/suite.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "pqrs/errors.hpp"
#include "pqrs/fock.hpp"
#include "pqrs/ops.hpp"
#include "pqrs/poly.hpp"
#include "pqrs/pqcore.hpp"
#include "pqrs/serialize.hpp"

namespace pqrs {

namespace {

long long randIn(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

Rational randomRational(std::mt19937_64& rng) {
  return {randIn(rng, -9, 9), randIn(rng, 1, 9)};
}

Rational randomNonzeroRational(std::mt19937_64& rng) {
  Rational r = randomRational(rng);
  while (r.isZero()) r = randomRational(rng);
  return r;
}

// Rational in [1/4, 4]: numerator 1..4*den over denominator 1..4.
Rational randomHermiteParam(std::mt19937_64& rng) {
  const long long den = randIn(rng, 1, 4);
  return {randIn(rng, 1, 4 * den), den};
}

std::string fmtDouble(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

CheckLine fromLinOp(const std::string& suite, const LinOpReport& r) {
  CheckLine line;
  line.suite = suite;
  line.name = r.name;
  line.indices = r.indices;
  line.pass = r.pass;
  if (!r.pass) line.detail = r.residual.str();
  line.report = toJson(r);
  return line;
}

CheckLine fromAlgebra(const std::string& suite, const AlgebraReport& r) {
  CheckLine line;
  line.suite = suite;
  line.name = r.relation;
  line.indices = {r.interior};
  line.pass = r.pass;
  if (!r.pass) line.detail = r.worstResidual.str();
  line.report = toJson(r);
  return line;
}

// Folds per-k constant residuals into one polynomial residual, coefficient
// of x^k = residual at k, so a whole binomial row becomes one line.
XPoly foldRow(const std::vector<Scalar>& residuals) {
  return XPoly(residuals);
}

void runPqcore(const SuiteConfig& cfg, std::mt19937_64& rng, std::vector<CheckLine>& out) {
  for (int n = 0; n <= cfg.nmax; ++n) {
    std::vector<Scalar> dual(n + 1);
    std::vector<Scalar> ppow(n + 1);
    for (int k = 0; k <= n; ++k) {
      dual[k] = pqBinomial(n, k) - pqBinomialPascal(n, k);
      ppow[k] = checkBinomialPPowerIdentity(n, k).residual.coeff(0);
    }
    out.push_back(fromLinOp("pqcore", makeReport("binomial-dual", {n}, foldRow(dual))));
    out.push_back(fromLinOp("pqcore",
                            makeReport("binomial-p-power-reduction", {n}, foldRow(ppow))));
  }

  const int sfMax = std::min(cfg.nmax, 8);
  const int samples = 50;
  LinOpReport worst = makeReport("shifted-factorial-reduction", {samples, sfMax}, {});
  for (int i = 0; i < samples; ++i) {
    const Rational a = randomNonzeroRational(rng);
    const Rational b = randomRational(rng);
    const int n = static_cast<int>(randIn(rng, 0, sfMax));
    LinOpReport r = checkShiftedFactorialReduction(a, b, n);
    if (!r.pass && worst.pass) {
      worst.pass = false;
      worst.residual = r.residual;
    }
  }
  out.push_back(fromLinOp("pqcore", worst));
}

void runPoly(const SuiteConfig& cfg, std::mt19937_64& rng, std::vector<CheckLine>& out) {
  for (int n = 0; n <= cfg.nmax; ++n) {
    out.push_back(fromLinOp("poly", checkSwMatchesInvertedRs(n)));
  }
  for (int n = 0; n <= std::min(cfg.nmax, 8); ++n) {
    out.push_back(fromLinOp("poly", checkSpecialRsQinv(n)));
  }
  for (int n = 0; n <= cfg.nmax; ++n) {
    out.push_back(fromLinOp("poly", checkSelfReciprocal(n)));
  }

  const int samples = 1000;
  double maxImag = 0.0;
  double maxCosDev = 0.0;
  bool imagOk = true;
  for (int i = 0; i < samples; ++i) {
    const int n = static_cast<int>(randIn(rng, 0, 10));
    const double theta =
        6.283185307179586 * (static_cast<double>(rng() >> 11) / 9007199254740992.0);
    const Rational p0 = cfg.pNum ? *cfg.pNum : randomHermiteParam(rng);
    const Rational q0 = cfg.qNum ? *cfg.qNum : randomHermiteParam(rng);
    try {
      const HermiteResult h = hermiteEval(n, theta, p0, q0);
      maxImag = std::max(maxImag, h.imagResidue);
      const HermiteResult h1 = hermiteEval(1, theta, p0, q0);
      maxCosDev = std::max(maxCosDev, std::abs(h1.value - 2.0 * std::cos(theta)));
    } catch (const ImaginaryResidueTooLarge&) {
      imagOk = false;
    }
  }
  CheckLine imagLine;
  imagLine.suite = "poly";
  imagLine.name = "hermite-imag-residue";
  imagLine.indices = {samples};
  imagLine.pass = imagOk && maxImag <= 1e-10;
  imagLine.detail = "max |Im| = " + fmtDouble(maxImag);
  imagLine.report = {{"name", imagLine.name},
                     {"indices", imagLine.indices},
                     {"pass", imagLine.pass},
                     {"maxImag", maxImag}};
  out.push_back(std::move(imagLine));

  CheckLine cosLine;
  cosLine.suite = "poly";
  cosLine.name = "hermite-degree-one-cosine";
  cosLine.indices = {samples};
  cosLine.pass = maxCosDev <= 1e-12;
  cosLine.detail = "max |H_1 - 2cos| = " + fmtDouble(maxCosDev);
  cosLine.report = {{"name", cosLine.name},
                    {"indices", cosLine.indices},
                    {"pass", cosLine.pass},
                    {"maxDeviation", maxCosDev}};
  out.push_back(std::move(cosLine));

  const int pairs = 100;
  LinOpReport obstruction = makeReport("no-rescaling-obstruction", {pairs}, {});
  for (int i = 0; i < pairs; ++i) {
    Rational p0 = randomRational(rng);
    Rational q0 = randomRational(rng);
    while ((p0 - 1).isZero()) p0 = randomRational(rng);
    while ((q0 - 1).isZero()) q0 = randomRational(rng);
    const LinOpReport r = checkNoRescaling(p0, q0);
    if (!r.pass && obstruction.pass) {
      obstruction.pass = false;
      obstruction.residual = r.residual;
    }
  }
  out.push_back(fromLinOp("poly", obstruction));

  const auto degenerate = [](const std::string& name, const Rational& p0, const Rational& q0) {
    CheckLine line;
    line.suite = "poly";
    line.name = name;
    line.pass = false;
    try {
      checkNoRescaling(p0, q0);
      line.detail = "precondition not enforced";
    } catch (const PreconditionViolated&) {
      line.pass = true;
    }
    line.report = {{"name", name}, {"indices", line.indices}, {"pass", line.pass}};
    return line;
  };
  out.push_back(degenerate("no-rescaling-degenerate-p", 1, Rational(3, 2)));
  out.push_back(degenerate("no-rescaling-degenerate-q", Rational(3, 2), 1));
}

void runOps(const SuiteConfig& cfg, std::vector<CheckLine>& out) {
  for (int n = 0; n <= cfg.nmax; ++n) {
    for (auto& r : checkLadderSuite(n)) out.push_back(fromLinOp("ops", r));
  }
  for (int n = 1; n <= cfg.nmax; ++n) {
    out.push_back(fromLinOp("ops", checkRecurrencePqro(n)));
  }
  for (int n = 0; n <= cfg.nmax; ++n) {
    out.push_back(fromLinOp("ops", checkDiffeq(n)));
  }
  for (int n = 0; n <= cfg.nmax; ++n) {
    for (auto& r : checkNilpotency(n)) out.push_back(fromLinOp("ops", r));
  }
  for (int n = 1; n <= cfg.nmax; ++n) {
    std::vector<Scalar> row(n + 2);
    for (int k = 0; k <= n + 1; ++k) row[k] = checkQid(n, k).residual.coeff(0);
    out.push_back(fromLinOp("ops", makeReport("q-binomial-recurrence", {n}, foldRow(row))));
  }
  for (int n = 0; n <= cfg.nmax; ++n) {
    for (auto& r : checkQLadderSuite(n)) out.push_back(fromLinOp("ops", r));
  }
  for (int n = 1; n <= cfg.nmax; ++n) {
    out.push_back(fromLinOp("ops", checkQRecurrence(n)));
  }
  for (int n = 0; n <= cfg.nmax; ++n) {
    out.push_back(fromLinOp("ops", checkQDiffeq(n)));
  }
}

void runFock(const SuiteConfig& cfg, std::vector<CheckLine>& out) {
  Ladder ladder = buildLadder(cfg.fockNmax);
  if (cfg.corruptLadder) ladder.plus.at(1, 0) += Scalar::one();
  for (auto& r : checkPqOscillatorWith(ladder, cfg.fockNmax)) {
    out.push_back(fromAlgebra("fock", r));
  }
  for (auto& r : checkQOscillator(cfg.fockNmax)) out.push_back(fromAlgebra("fock", r));
  for (auto& r : checkClassicalOscillator(cfg.fockNmax)) {
    out.push_back(fromAlgebra("fock", r));
  }
  const int twoModeNmax = std::min(cfg.fockNmax, 6);
  for (auto& r : checkJsSl2(twoModeNmax)) out.push_back(fromAlgebra("fock", r));
  for (auto& r : checkJsUqSl2(twoModeNmax)) out.push_back(fromAlgebra("fock", r));
}

}  // namespace

std::vector<CheckLine> runSuites(const SuiteConfig& cfg) {
  if (cfg.nmax < 1) throw PreconditionViolated("nmax must be >= 1");
  if (cfg.fockNmax < 3) throw PreconditionViolated("fockNmax must be >= 3");
  if (cfg.pNum.has_value() != cfg.qNum.has_value()) {
    throw PreconditionViolated("numeric mode needs both p and q");
  }
  const std::vector<std::string> known = {"pqcore", "poly", "ops", "fock"};
  for (const auto& s : cfg.suites) {
    if (std::find(known.begin(), known.end(), s) == known.end()) {
      throw PreconditionViolated("unknown suite: " + s);
    }
  }
  const auto selected = [&cfg](const char* name) {
    return std::find(cfg.suites.begin(), cfg.suites.end(), name) != cfg.suites.end();
  };

  std::mt19937_64 rng(cfg.seed);
  std::vector<CheckLine> out;
  if (selected("pqcore")) runPqcore(cfg, rng, out);
  if (selected("poly")) runPoly(cfg, rng, out);
  if (selected("ops")) runOps(cfg, out);
  if (selected("fock")) runFock(cfg, out);
  return out;
}

bool allPass(const std::vector<CheckLine>& lines) {
  return std::all_of(lines.begin(), lines.end(),
                     [](const CheckLine& l) { return l.pass; });
}

std::string renderCsv(const std::vector<CheckLine>& lines) {
  std::ostringstream out;
  out << "suite,name,indices,status,detail\n";
  for (const auto& l : lines) {
    out << l.suite << ',' << l.name << ',';
    for (std::size_t i = 0; i < l.indices.size(); ++i) {
      if (i) out << ';';
      out << l.indices[i];
    }
    out << ',' << (l.pass ? "pass" : "FAIL") << ',' << l.detail << '\n';
  }
  return out.str();
}

std::string renderJson(const SuiteConfig& cfg, const std::vector<CheckLine>& lines) {
  nlohmann::json cfgJson = {{"nmax", cfg.nmax},
                            {"fockNmax", cfg.fockNmax},
                            {"suites", cfg.suites},
                            {"seed", cfg.seed},
                            {"corruptLadder", cfg.corruptLadder}};
  if (cfg.pNum) cfgJson["p"] = cfg.pNum->str();
  if (cfg.qNum) cfgJson["q"] = cfg.qNum->str();
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& l : lines) {
    arr.push_back({{"suite", l.suite},
                   {"name", l.name},
                   {"indices", l.indices},
                   {"pass", l.pass},
                   {"detail", l.detail},
                   {"report", l.report}});
  }
  const nlohmann::json doc = {{"config", std::move(cfgJson)},
                              {"lines", std::move(arr)},
                              {"allPass", allPass(lines)}};
  return doc.dump(2) + "\n";
}

}  // namespace pqrs
