// Copyright 2026 The crclab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CRCLAB_REGULARITY_HPP
#define CRCLAB_REGULARITY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "crclab/code.hpp"

namespace crclab {

using Rational = boost::multiprecision::cpp_rational;

/// (b_0, ..., b_{rho-1}; c_1, ..., c_rho).
struct IntersectionArray {
  std::vector<std::uint64_t> b;
  std::vector<std::uint64_t> c;

  std::size_t diameter() const noexcept { return c.size(); }
  /// a_l = degree - b_l - c_l, with b_rho = c_0 = 0.
  std::int64_t a(std::size_t l, std::uint64_t degree) const;

  friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
};

std::string to_string(const IntersectionArray& ia);

/// Two syndromes in one weight layer whose neighbour counts differ.
struct CrWitness {
  unsigned layer = 0;
  std::uint64_t first = 0;
  std::uint64_t second = 0;
  std::uint64_t first_c = 0, first_b = 0;
  std::uint64_t second_c = 0, second_b = 0;
};

struct CrVerdict {
  std::optional<IntersectionArray> array;
  std::optional<CrWitness> witness;

  bool completely_regular() const noexcept { return array.has_value(); }
};

/**
 * Equitable-partition scan on syndromes. For each syndrome of weight l, the
 * full generator multiset is applied and the moves landing in weight l-1 and
 * l+1 are counted; the code is completely regular iff these counts are
 * constant on each layer. The scan is in syndrome order and stops at the first
 * syndrome that disagrees with the first syndrome of its layer.
 */
CrVerdict check_completely_regular(const CosetTable& table);

/// b_l = (q^{u m_a} - q^l)(q^{m_b} - q^l)/(q-1), c_l = q^{l-1}(q^l-1)/(q-1), rho = min(u m_a, m_b).
IntersectionArray predicted_intersection_array(std::uint64_t q, unsigned u, unsigned m_a, unsigned m_b);

/// mu_i b_i == mu_{i+1} c_{i+1} for every i < rho.
bool verify_mu_recurrence(const CosetTable& table, const IntersectionArray& ia);

struct UPCertificate {
  unsigned rho = 0;
  unsigned s = 0;
  bool is_up = false;
  std::optional<std::vector<Rational>> alpha;
};

UPCertificate check_uniformly_packed(const LinearCode& code, const CosetTable& table, const Limits& limits = {});

/// Exact solution of sum_k alpha_k f_k(v) = 1 over all cosets, nullopt if the
/// system is inconsistent. Free unknowns are set to zero.
std::optional<std::vector<Rational>> solve_alpha(const LinearCode& code, const CosetDistributions& dists, unsigned rho);
std::optional<std::vector<Rational>> solve_alpha(const LinearCode& code, const Limits& limits = {});

/// Complete regularity through coset weight distributions: cosets of equal
/// minimum weight must have identical distributions. Returns the first pair
/// of syndromes that violates it.
std::optional<std::pair<std::uint64_t, std::uint64_t>> distribution_cr_violation(const CosetDistributions& dists);

}  // namespace crclab

#endif  // CRCLAB_REGULARITY_HPP
