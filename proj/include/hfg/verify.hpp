#ifndef HFG_VERIFY_HPP
#define HFG_VERIFY_HPP

#include "hfg/fatgrid.hpp"
#include "hfg/ideal.hpp"
#include "hfg/kernels.hpp"
#include "hfg/projective.hpp"

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace hfg {

/// Order of the zero polynomial at any point.
inline constexpr unsigned kInfiniteOrder = std::numeric_limits<unsigned>::max();

/// Largest m with f in I(P)^m. Throws DomainError if f is not homogeneous or
/// not over the plane block.
unsigned vanishing_order(const Polynomial& f, const Point& p);

struct VerifyBudget {
  /// Largest number of rows or columns of a rank matrix.
  std::size_t max_matrix_dim = 2000;
  GroebnerBudget groebner;
  OracleBudget oracle;
};

/// dim of the degree-d piece of the ideal of the fat points, by exact rank.
/// Throws BudgetExceeded when the condition matrix is too large.
std::int64_t hilbert_function_oracle(std::span<const FatPoint> points, unsigned d, const VerifyBudget& budget = {},
                                     std::uint64_t* work = nullptr);
std::int64_t hilbert_function_oracle(const FatGrid& grid, unsigned d, const VerifyBudget& budget = {},
                                     std::uint64_t* work = nullptr);

std::vector<FatPoint> grid_fat_points(const FatGrid& grid);

struct VerificationInstance {
  std::string input;
  std::string expected;
  std::string computed;
  bool pass = false;
  /// Set when the prediction comes from a computation whose scope is wider
  /// than the statement it illustrates. Does not affect pass.
  bool flagged = false;
};

class VerificationReport {
public:
  explicit VerificationReport(std::string subject) : subject_(std::move(subject)) {}

  const std::string& subject() const { return subject_; }
  const std::vector<VerificationInstance>& instances() const { return instances_; }
  /// Matrix entries eliminated plus Groebner eliminations performed.
  std::uint64_t budget_used() const { return budget_used_; }
  bool passed() const;

  void add(VerificationInstance instance) { instances_.push_back(std::move(instance)); }
  void add_work(std::uint64_t units) { budget_used_ += units; }
  /// Appends the other report's instances and work.
  void append(const VerificationReport& other);

private:
  std::string subject_;
  std::vector<VerificationInstance> instances_;
  std::uint64_t budget_used_ = 0;
};

/// Reduced grevlex basis as "<g1, g2, ...>".
std::string describe(const IdealPresentation& ideal);

/// Compares I(P)^m (star) I(Q)^n with the prediction for the strata of P and
/// Q. Throws DomainError when P*Q is undefined or m, n = 0.
VerificationReport check_point_power_product(const Point& p, const Point& q, unsigned m, unsigned n,
                                             const VerifyBudget& budget = {});

/// I(P) (star) m^t against m^t, or against the explicit ideals for P on a
/// coordinate line. Throws DomainError for t = 0.
VerificationReport check_lemma_gpnew(const Point& p, unsigned t, const VerifyBudget& budget = {});

/// join(I(P), m^t) against I(P)^t. Throws DomainError for t = 0.
VerificationReport check_join_symbolic(const Point& p, unsigned t, const VerifyBudget& budget = {});

/// Pattern vanishing orders, generator ideal against the intersection oracle,
/// resolution Hilbert function against the rank oracle up to the largest
/// syzygy twist, and the minimal degree against the oracle.
VerificationReport check_grid_end_to_end(const FatGrid& grid, const VerifyBudget& budget = {});

} // namespace hfg

#endif
