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

#ifndef CRCLAB_FAMILIES_HPP
#define CRCLAB_FAMILIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crclab/code.hpp"
#include "crclab/regularity.hpp"

namespace crclab {

enum class FamilyKind { kronecker_same, kronecker_mixed, lifted, main_family, corollary_family, up_repetition, remark };

std::string to_string(FamilyKind k);

/// Properties a construction is expected to have. Unset fields are not claimed.
struct Claims {
  std::size_t n = 0;
  std::size_t k = 0;
  std::optional<unsigned> d;
  std::optional<unsigned> rho;
  std::optional<unsigned> s;
  std::optional<IntersectionArray> array;
  std::optional<bool> cr;
  std::optional<bool> up;
};

struct FamilySpec {
  FamilyKind kind = FamilyKind::kronecker_same;
  std::string label;
  std::vector<std::pair<std::string, std::uint64_t>> params;
  Claims claims;
  bool degenerate = false;
  /// Complete transitivity is carried as metadata only.
  std::optional<std::string> complete_transitivity;
  /// Order of the field the code is defined over.
  std::uint64_t field_order = 0;
};

struct FamilyMember {
  LinearCode code;
  FamilySpec spec;
};

/// H_{m_a} over F_{q^u} (x) H_{m_b} over F_q.
FamilyMember kronecker_code(std::uint64_t q, unsigned u, unsigned m_a, unsigned m_b);

/// q-ary Hamming code with redundancy m read over F_{q^r}.
FamilyMember lifted_code(std::uint64_t q, unsigned m, unsigned r);

/// The five constructions i)..v) sharing one intersection array.
std::vector<FamilyMember> theorem_main_family(std::uint64_t q, unsigned a, unsigned b, unsigned u);

struct CorollaryFamily {
  std::vector<FamilyMember> members;  // after deduplication
  std::size_t constructed = 0;        // before deduplication
  std::size_t field_choices = 0;      // distinct field orders
  std::size_t bound = 0;              // tau(a) + tau(b)
};

/// Kronecker codes over F_{q^{a/a'}} and F_{q^{b/b'}} for the divisors a', b' > 1,
/// plus the two lifted Hamming codes. Duplicates (same field order, length and
/// column multiset) are dropped.
CorollaryFamily corollary_family(std::uint64_t q, unsigned a, unsigned b);

/// H_m over F_{q^u} (x) the repetition check matrix of length n_b over F_q.
FamilyMember up_family(std::uint64_t q, unsigned u, unsigned m, unsigned n_b);

/// [45, 41, 3] code over F_64 from the F_4 and F_8 Hamming matrices with two rows.
/// Throws SlowModeRequired unless slow is set.
FamilyMember remark_counterexample(bool slow);

std::size_t divisor_count(unsigned n);

/// Same field order, length and sorted column multiset of the reduced parity-check matrix.
bool same_columns(const LinearCode& a, const LinearCode& b);

}  // namespace crclab

#endif  // CRCLAB_FAMILIES_HPP
