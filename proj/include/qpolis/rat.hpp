#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace qpolis {

using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p/q" or "p" with exact integer arithmetic.
Rat parse_rat(const std::string& s);

std::string rat_str(const Rat& q);

/// Cantor-style pairing fixed across the project: pair(i,k) = (i+k)(i+k+1)/2 + k.
inline std::uint64_t diag_pair(std::uint64_t i, std::uint64_t k) {
  std::uint64_t s = i + k;
  return s * (s + 1) / 2 + k;
}

/// Inverse of diag_pair.
void diag_unpair(std::uint64_t n, std::uint64_t& i, std::uint64_t& k);

/// m-th positive rational in breadth-first Stern-Brocot order:
/// 1, 1/2, 2, 1/3, 2/3, 3/2, 3, ...
Rat stern_brocot(std::uint64_t m);

/// Fixed enumeration of all rationals: 0, 1, -1, 1/2, -1/2, 2, -2, ...
/// (zero first, then the Stern-Brocot sequence interleaved with its negation).
Rat rational_at(std::uint64_t j);

/// Least index j with rational_at(j) == q, scanning; q must be canonical.
/// Used to compute documented separation fuels; cost is linear in the index.
std::uint64_t rational_index(const Rat& q, std::uint64_t limit = 1u << 22);

}  // namespace qpolis
