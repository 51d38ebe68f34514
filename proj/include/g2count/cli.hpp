#pragma once
/**
 * @file cli.hpp
 * @brief The g2count command line, as a function so tests can drive it.
 *
 * Exit codes: 0 success, 1 verification failure, 2 usage error,
 * 3 internal consistency error.
 */

#include <CLI11.hpp>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "g2count/counts.hpp"
#include "g2count/errors.hpp"
#include "g2count/gammaclasses.hpp"
#include "g2count/modforms.hpp"
#include "g2count/selftest.hpp"
#include "g2count/weylchar.hpp"

#ifndef G2COUNT_DATA_DIR
#define G2COUNT_DATA_DIR "data"
#endif

namespace g2count::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kInternal = 3 };

inline std::string defaultClassFile() { return std::string(G2COUNT_DATA_DIR) + "/g2c_classes.json"; }

namespace detail {

struct Options {
  unsigned jobs = defaultJobs();
  std::string classFile = defaultClassFile();
  bool regenerate = false;
  int verbosity = 0;

  std::int64_t kFrom = 3;
  std::int64_t kTo = 52;
  std::string format = "table";
  std::vector<std::int64_t> weight;
  std::string emitPath;
  bool verifyClasses = false;
  std::int64_t modK = 0;
  std::string fixturePath;
};

class Timer {
 public:
  Timer(std::ostream& err, int verbosity, std::string what)
      : err_(err), on_(verbosity > 0), what_(std::move(what)), start_(std::chrono::steady_clock::now()) {}
  ~Timer() {
    if (!on_) return;
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start_)
                        .count();
    err_ << "[g2count] " << what_ << ": " << ms << " ms\n";
  }

 private:
  std::ostream& err_;
  bool on_;
  std::string what_;
  std::chrono::steady_clock::time_point start_;
};

inline std::vector<ConjClassRecord> loadClasses(const Options& o, std::ostream& err) {
  if (o.regenerate) {
    Timer t(err, o.verbosity, "class table regenerated");
    return deriveClassTable();
  }
  Timer t(err, o.verbosity, "class table read from " + o.classFile);
  return readClassFile(o.classFile);
}

inline Weight weightArg(const Options& o) {
  if (o.weight.size() != 2) throw std::invalid_argument("--weight takes two integers A B");
  return Weight(o.weight[0], o.weight[1]);
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  detail::Options o;
  CLI::App app{"Exact counts of level-one quaternionic automorphic representations on G2"};
  app.name("g2count");
  app.require_subcommand(1, 1);
  app.fallthrough();

  app.add_option("-j,--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--data", o.classFile, "class datafile");
  app.add_flag("--regenerate", o.regenerate, "rebuild the class table from the octonion order");
  app.add_flag("-v,--verbose", o.verbosity, "timing diagnostics on stderr");

  auto* count = app.add_subcommand("count", "tabulate |Q_k(1)| over a range of weights");
  count->add_option("--from", o.kFrom, "first weight")->required();
  count->add_option("--to", o.kTo, "last weight")->required();
  count->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"table", "csv", "json"}));

  auto* invariant = app.add_subcommand("invariant", "dimension of invariants of G2^c(Z) in V_lambda");
  invariant->add_option("--weight", o.weight, "A B for lambda = A eps1 + B eps2")
      ->expected(2)
      ->required();

  auto* classes = app.add_subcommand("classes", "write or check the class datafile");
  auto* emit = classes->add_option("--emit", o.emitPath, "regenerate and write to PATH");
  auto* verifyOpt = classes->add_flag("--verify", o.verifyClasses,
                                      "regenerate and compare with the datafile byte for byte");
  emit->excludes(verifyOpt);
  classes->require_option(1);

  auto* dims = app.add_subcommand("dims", "Weyl dimension of V_lambda");
  dims->add_option("--weight", o.weight, "A B for lambda = A eps1 + B eps2")->expected(2)->required();

  auto* modforms = app.add_subcommand("modforms", "dimension of level-one cusp forms of weight K");
  modforms->add_option("--k", o.modK, "weight")->required();

  auto* verify = app.add_subcommand("verify", "recompute every entry of a count fixture");
  verify->add_option("--fixture", o.fixturePath, "JSON object {\"k\": count}")->required();

  auto* selftest = app.add_subcommand("selftest", "run the invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (count->parsed()) {
      requireWeightAboveTwo(o.kFrom);
      const auto cls = detail::loadClasses(o, err);
      detail::Timer t(err, o.verbosity, "counts");
      const auto reports = countRange(o.kFrom, o.kTo, cls, o.jobs);
      if (o.format == "csv") {
        out << formatCsv(reports);
      } else if (o.format == "json") {
        out << formatJson(reports);
      } else {
        out << formatTable(reports);
      }
      return kOk;
    }
    if (invariant->parsed()) {
      const Weight l = detail::weightArg(o);
      const auto cls = detail::loadClasses(o, err);
      out << invariantDim(l, cls).get_str() << "\n";
      return kOk;
    }
    if (dims->parsed()) {
      out << weylDim(detail::weightArg(o)).get_str() << "\n";
      return kOk;
    }
    if (modforms->parsed()) {
      out << dimCuspForms(o.modK) << "\n";
      return kOk;
    }
    if (classes->parsed()) {
      std::vector<ConjClassRecord> fresh;
      {
        detail::Timer t(err, o.verbosity, "class table regenerated");
        fresh = deriveClassTable();
      }
      const std::string text = classesToJson(fresh);
      if (!o.emitPath.empty()) {
        writeClassFile(o.emitPath, fresh);
        out << "wrote " << fresh.size() << " classes to " << o.emitPath << "\n";
        return kOk;
      }
      std::ifstream in(o.classFile, std::ios::binary);
      if (!in) throw FixtureMissing("class datafile " + o.classFile + " not found");
      std::stringstream buf;
      buf << in.rdbuf();
      if (buf.str() != text) {
        err << "class datafile " << o.classFile << " differs from the regenerated table\n";
        return kVerifyFailed;
      }
      out << "class datafile matches (" << fresh.size() << " classes)\n";
      return kOk;
    }
    if (verify->parsed()) {
      const auto cls = detail::loadClasses(o, err);
      const auto result = verifyFixture(o.fixturePath, cls, o.jobs);
      (result.pass ? out : err) << describe(result);
      return result.pass ? kOk : kVerifyFailed;
    }
    if (selftest->parsed()) {
      const auto cls = detail::loadClasses(o, err);
      return runSelfTest(cls, out) == 0 ? kOk : kVerifyFailed;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

/// Convenience overload: args exclude the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"g2count"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace g2count::cli
