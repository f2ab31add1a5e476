#pragma once

// Perfect-square structure of tau(n): tau(n) = p * n * tau(H) * a(n)^2 with
// p = 1 for odd n and p the square-free part of Q(-1) for even n.

#include <optional>
#include <string>
#include <vector>

#include "circfol/bigint.hpp"
#include "circfol/foliation.hpp"

namespace circfol {

/// Sum of squared jumps over all fibers.
BigInt q_sum_squares(const FoliationSpec& spec);

/// Q(-1) as det L(H, W) with W_i = d_i + 4 t_i, t_i the number of odd jumps
/// in fiber i. Cross-checked against build_Q(spec)(-1); a mismatch throws
/// InternalError.
BigInt q_minus_one(const FoliationSpec& spec);

struct SquareFreeSplit {
  BigInt p;  // square-free
  BigInt r;  // v = p * r^2
};

inline constexpr unsigned long kTrialDivisionBound = 1'000'000;

/// v = p * r^2 with p square-free, by trial division up to `bound` and a
/// perfect-square test on the remaining cofactor. Throws FactorizationLimit
/// when the cofactor can be neither certified prime nor a square.
SquareFreeSplit square_free_part(const BigInt& v, unsigned long bound = kTrialDivisionBound);

enum class Parity { odd, even };

struct TauDecomposition {
  long n = 0;
  Parity parity = Parity::odd;
  BigInt tau;
  BigInt tau_H;
  BigInt p;
  BigInt a;
};

/// Requires a connected cover inside the theorem domain. Throws
/// NotPerfectSquare if tau / (p n tau(H)) is not an exact square.
TauDecomposition decompose_tau(const FoliationSpec& spec, long n);

struct Theorem2Row {
  long n = 0;
  bool connected = false;
  bool in_domain = false;
  std::optional<TauDecomposition> decomposition;
  bool ok = false;
  std::string note;
};

struct Theorem2Report {
  std::vector<Theorem2Row> rows;
  bool all_ok() const;
  /// a(n) for the rows that decomposed.
  std::vector<BigInt> a_sequence() const;
};

/// Runs decompose_tau for n in [n_from, n_to]; disconnected or out-of-domain
/// n are skipped with a note, failures are recorded in the row.
Theorem2Report verify_theorem2(const FoliationSpec& spec, long n_from, long n_to);

/// CSV with header "n,parity,tau,p,a,ok".
std::string theorem2_csv(const Theorem2Report& report);

const char* parity_name(Parity p);

}  // namespace circfol
