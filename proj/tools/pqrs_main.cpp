#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pqrs/errors.hpp"
#include "pqrs/fock.hpp"
#include "pqrs/ops.hpp"
#include "pqrs/poly.hpp"
#include "pqrs/pqcore.hpp"
#include "pqrs/serialize.hpp"
#include "pqrs/suite.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumericDiagnostic = 3;

std::optional<pqrs::Rational> parseOpt(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return pqrs::Rational::parse(s);
}

void emit(const std::string& text, const std::string& outFile) {
  if (outFile.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(outFile, std::ios::binary);
  if (!f) throw pqrs::PreconditionViolated("cannot open output file: " + outFile);
  f << text;
}

std::string fmtValue(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string fmtResidue(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string polyTable(const pqrs::XPoly& f) {
  std::ostringstream out;
  for (int k = 0; k <= std::max(f.degree(), 0); ++k) {
    out << "x^" << k << ": " << f.coeff(k).str() << "\n";
  }
  return out.str();
}

std::string tableText(const std::string& kind, int nmax, const std::string& format) {
  using nlohmann::json;
  std::ostringstream csv;
  json rows = json::array();
  if (kind == "numbers") {
    for (int n = 0; n <= nmax; ++n) {
      csv << pqrs::pqNumber(n).str() << "\n";
      rows.push_back(pqrs::toJson(pqrs::pqNumber(n)));
    }
  } else if (kind == "binomials") {
    for (int n = 0; n <= nmax; ++n) {
      for (int k = 0; k <= n; ++k) {
        csv << n << ',' << k << ',' << pqrs::pqBinomial(n, k).str() << "\n";
        rows.push_back({{"n", n}, {"k", k}, {"value", pqrs::toJson(pqrs::pqBinomial(n, k))}});
      }
    }
  } else {  // rs-coeffs
    for (int n = 0; n <= nmax; ++n) {
      const pqrs::XPoly h = pqrs::pqRsPoly(n);
      json row = json::array();
      for (int k = 0; k <= n; ++k) {
        if (k) csv << ',';
        csv << h.coeff(k).str();
        row.push_back(pqrs::toJson(h.coeff(k)));
      }
      csv << "\n";
      rows.push_back(std::move(row));
    }
  }
  if (format == "json") {
    const json doc = {{"kind", kind}, {"nmax", nmax}, {"rows", std::move(rows)}};
    return doc.dump(2) + "\n";
  }
  return csv.str();
}

unsigned long long envSeed() {
  const char* s = std::getenv("PQRS_SEED");
  if (s == nullptr || *s == '\0') return 0;
  return std::strtoull(s, nullptr, 10);
}

bool envCorruptLadder() {
  const char* s = std::getenv("PQRS_CORRUPT");
  return s != nullptr && std::string(s) == "ladder";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact two-parameter deformation calculus: numbers, binomials, "
               "polynomial families, and operator/algebra verification"};
  app.require_subcommand(1);

  int n = 0;
  int k = 0;
  int nmax = 10;
  int fockNmax = 8;
  double theta = 0.0;
  std::string pStr;
  std::string qStr;
  std::string xStr;
  std::string family;
  std::string kind;
  std::string format = "csv";
  std::string outFile;
  std::vector<std::string> suites = {"pqcore", "poly", "ops", "fock"};

  auto* cmdNumber = app.add_subcommand("number", "Deformed number [n] as a polynomial in p, q");
  cmdNumber->add_option("--n", n, "Index")->required()->check(CLI::NonNegativeNumber);
  cmdNumber->add_option("--p", pStr, "Exact rational p, e.g. 2 or 3/2");
  cmdNumber->add_option("--q", qStr, "Exact rational q");

  auto* cmdBinom = app.add_subcommand("binom", "Deformed binomial [n k]");
  cmdBinom->add_option("--n", n, "Row")->required()->check(CLI::NonNegativeNumber);
  cmdBinom->add_option("--k", k, "Column")->required();
  cmdBinom->add_option("--p", pStr, "Exact rational p");
  cmdBinom->add_option("--q", qStr, "Exact rational q");

  auto* cmdPoly = app.add_subcommand("poly", "Polynomial family coefficients or exact value");
  cmdPoly->add_option("family", family, "One of rs, pqrs, sw, qinv")
      ->required()
      ->check(CLI::IsMember({"rs", "pqrs", "sw", "qinv"}));
  cmdPoly->add_option("--n", n, "Degree")->required()->check(CLI::NonNegativeNumber);
  cmdPoly->add_option("--x", xStr, "Evaluate at exact rational x");
  cmdPoly->add_option("--p", pStr, "Exact rational p");
  cmdPoly->add_option("--q", qStr, "Exact rational q");

  auto* cmdHermite = app.add_subcommand("hermite", "Continuous Hermite-type value at cos(theta)");
  cmdHermite->add_option("--n", n, "Degree")->required()->check(CLI::NonNegativeNumber);
  cmdHermite->add_option("--theta", theta, "Angle in radians")->required();
  cmdHermite->add_option("--p", pStr, "Exact rational p")->required();
  cmdHermite->add_option("--q", qStr, "Exact rational q")->required();

  auto* cmdCheck = app.add_subcommand("check", "Run the identity and algebra suites");
  cmdCheck->add_option("--nmax", nmax, "Polynomial identity sweep bound (default 10)");
  cmdCheck->add_option("--fock-nmax", fockNmax, "Matrix truncation bound (default 8)");
  cmdCheck->add_option("--suites", suites, "Subset of pqcore, poly, ops, fock")
      ->delimiter(',');
  cmdCheck->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmdCheck->add_option("--p", pStr, "Pin numeric-diagnostic sampling point");
  cmdCheck->add_option("--q", qStr, "Pin numeric-diagnostic sampling point");
  cmdCheck->add_option("--out", outFile, "Write the report to a file");

  auto* cmdTable = app.add_subcommand("table", "Tabulate numbers, binomials, or coefficient rows");
  cmdTable->add_option("kind", kind, "One of numbers, binomials, rs-coeffs")
      ->required()
      ->check(CLI::IsMember({"numbers", "binomials", "rs-coeffs"}));
  cmdTable->add_option("--nmax", nmax, "Upper index")->check(CLI::NonNegativeNumber);
  cmdTable->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmdTable->add_option("--out", outFile, "Write the table to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const std::optional<pqrs::Rational> p0 = parseOpt(pStr);
    const std::optional<pqrs::Rational> q0 = parseOpt(qStr);

    if (*cmdNumber || *cmdBinom) {
      if (p0.has_value() != q0.has_value()) {
        std::cerr << "--p and --q must be given together\n";
        return kExitUsage;
      }
      const pqrs::Scalar value = *cmdNumber ? pqrs::pqNumber(n) : pqrs::pqBinomial(n, k);
      if (p0) {
        std::cout << value.substitute(*p0, *q0).str() << "\n";
      } else {
        std::cout << value.str() << "\n";
      }
      return kExitOk;
    }

    if (*cmdPoly) {
      pqrs::XPoly f;
      if (family == "rs") f = pqrs::rsPoly(n);
      else if (family == "pqrs") f = pqrs::pqRsPoly(n);
      else if (family == "sw") f = pqrs::swPoly(n);
      else f = pqrs::specialRsQinvQ(n);
      if (xStr.empty()) {
        std::cout << polyTable(f);
        return kExitOk;
      }
      const bool needsP = family == "pqrs" || family == "sw";
      if (needsP && (!p0 || !q0)) {
        std::cerr << "family " << family << " needs --p and --q for evaluation\n";
        return kExitUsage;
      }
      if (!needsP && !q0) {
        std::cerr << "family " << family << " needs --q for evaluation\n";
        return kExitUsage;
      }
      const pqrs::Rational value = pqrs::evalExact(
          f, pqrs::Rational::parse(xStr), p0 ? *p0 : pqrs::Rational(1), *q0);
      std::cout << value.str() << "\n";
      return kExitOk;
    }

    if (*cmdHermite) {
      const pqrs::HermiteResult h = pqrs::hermiteEval(n, theta, *p0, *q0);
      std::cout << "value " << fmtValue(h.value) << "\n"
                << "imag " << fmtResidue(h.imagResidue) << "\n";
      return kExitOk;
    }

    if (*cmdCheck) {
      if (p0.has_value() != q0.has_value()) {
        std::cerr << "--p and --q must be given together\n";
        return kExitUsage;
      }
      pqrs::SuiteConfig cfg;
      cfg.nmax = nmax;
      cfg.fockNmax = fockNmax;
      cfg.suites = suites;
      cfg.pNum = p0;
      cfg.qNum = q0;
      cfg.seed = envSeed();
      cfg.corruptLadder = envCorruptLadder();
      const std::vector<pqrs::CheckLine> lines = pqrs::runSuites(cfg);
      emit(format == "json" ? pqrs::renderJson(cfg, lines) : pqrs::renderCsv(lines),
           outFile);
      return pqrs::allPass(lines) ? kExitOk : kExitCheckFailed;
    }

    // table
    emit(tableText(kind, nmax, format), outFile);
    return kExitOk;
  } catch (const pqrs::ImaginaryResidueTooLarge& e) {
    std::cerr << "numeric diagnostic failure: " << e.what() << "\n";
    return kExitNumericDiagnostic;
  } catch (const pqrs::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const pqrs::PreconditionViolated& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const pqrs::DimensionMismatch& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const pqrs::ZeroBaseNegativeExponent& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const pqrs::HalfPowerOfNonSquare& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const pqrs::Error& e) {
    std::cerr << "check failure: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}
