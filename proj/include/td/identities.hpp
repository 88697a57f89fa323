#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "td/builders.hpp"
#include "td/diagram.hpp"
#include "td/eval.hpp"

namespace td {

using Rng = std::mt19937_64;

// Independent stream per (seed, check, n, trial).
Rng derive_rng(std::uint64_t seed, std::string_view id, int n, int trial);

// Uniform integer in [-bound, bound]; portable across standard libraries.
long long random_int(Rng& rng, long long bound);
// Integer entries in [-bound, bound]. invertible resamples up to 32 times.
Matrix random_matrix(int n, Rng& rng, int bound = 9, bool invertible = false);
Vector random_vector(int n, Rng& rng, int bound = 9);
// Entries p/q with |p| <= bound, 1 <= q <= bound.
Vector random_rational_vector(int n, Rng& rng, int bound = 9);
Vector basis_vector(int n, int i);  // 1-based

class CheckFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Per-trial state handed to a check procedure. Every random draw is recorded
// so a failure can be replayed.
class CheckContext {
 public:
  CheckContext(int n, int trial, Rng rng, const Bindings* fixture);

  int n() const { return n_; }
  int trial() const { return trial_; }
  Rng& rng() { return rng_; }

  Matrix matrix(const std::string& name, bool invertible = false);
  Vector vector(const std::string& name);
  // Record a value drawn or derived by the procedure itself.
  void note(const std::string& name, const Matrix& m) { matrices_[name] = m; }
  void note(const std::string& name, const Vector& v) { vectors_[name] = v; }

  // Both evaluators when the layered cost is small, contraction otherwise.
  Tensor eval(const LayeredDiagram& d, const Bindings& b);
  Tensor eval(const FormalSum& s, const Bindings& b);
  Tensor eval(const LayeredDiagram& d, const Bindings& b, Evaluator which);

  void expect(bool ok, const std::string& what);
  void expect_equal(const Tensor& got, const Tensor& want, const std::string& what);
  void expect_equal(const Rational& got, const Rational& want, const std::string& what);

  const Bindings& matrices() const { return matrices_; }
  const std::map<std::string, Vector>& vectors() const { return vectors_; }

 private:
  int n_;
  int trial_;
  Rng rng_;
  const Bindings* fixture_;
  Bindings matrices_;
  std::map<std::string, Vector> vectors_;
};

struct IdentityCheck {
  std::string id;
  std::string statement;
  int min_n = 2;
  int max_n = 4;
  bool stretch = false;
  std::function<void(CheckContext&)> procedure;
};

const std::vector<IdentityCheck>& identity_registry();
// Throws std::invalid_argument("unknown identity ...").
const IdentityCheck& find_identity(std::string_view id);

enum class Outcome { Pass, Fail };

struct Counterexample {
  int trial = 0;
  Bindings matrices;
  std::map<std::string, Vector> vectors;
  std::string message;
};

struct IdentityReport {
  std::string id;
  int n = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  Outcome outcome = Outcome::Pass;
  std::optional<Counterexample> failure;
  std::chrono::nanoseconds elapsed{0};

  bool passed() const { return outcome == Outcome::Pass; }
};

// A fixture supplies fixed values for named matrices the procedure would
// otherwise draw at random.
IdentityReport run_check(std::string_view id, int n, int trials, std::uint64_t seed,
                         const Bindings* fixture = nullptr);
// Every check (stretch ones only when asked) for n = 2..max_n within its range.
std::vector<IdentityReport> run_all(int max_n, int trials, std::uint64_t seed, bool stretch = false);

}  // namespace td
